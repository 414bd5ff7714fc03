// Number of complementary dual abelian codes for a few groups, and the
// Sylow independence of that number.

use abelian_lcd::{count_cyclic_lcd, count_lcd, AbelianGroup, DualityContext};

fn main() -> Result<(), abelian_lcd::Error> {
    let e2 = DualityContext::euclidean(2, 1)?;
    let h2 = DualityContext::hermitian(2, 1)?;

    for spec in ["3", "3,3", "7,7", "3,5", "3,3,3,3,3"] {
        let g: AbelianGroup = spec.parse()?;
        let e = count_lcd(&g, e2)?;
        let h = count_lcd(&g, h2)?;
        println!(
            "{spec:<10} over F_2: r = {:>3}, {} codes | over F_4 (Hermitian): r = {:>3}, {} codes",
            e.r_total(),
            e.lcd_count,
            h.r_total(),
            h.lcd_count
        );
    }

    // Adding a Sylow 2-part changes nothing.
    for spec in ["3", "3,2", "3,4", "3,2,2,8"] {
        let r = count_lcd(&spec.parse()?, e2)?;
        println!(
            "{spec:<8} = {} x {}: {} codes",
            r.p_prime_part, r.sylow_part, r.lcd_count
        );
    }

    let r = count_cyclic_lcd(63, DualityContext::euclidean(2, 1)?)?;
    println!(
        "Z_63 over F_2: r_one = {}, r_two = {}",
        r.r_one(),
        r.r_two()
    );
    Ok(())
}
