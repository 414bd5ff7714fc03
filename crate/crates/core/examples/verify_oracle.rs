// Brute-force LCD counts against the closed form over several small
// algebras, semisimple or not.

use abelian_lcd::{verify_counts, Capacity, DualityContext};

fn main() -> Result<(), abelian_lcd::Error> {
    let cases = [
        ("3", DualityContext::euclidean(2, 1)?),
        ("7", DualityContext::euclidean(2, 1)?),
        ("6", DualityContext::euclidean(2, 1)?),
        ("3,3", DualityContext::euclidean(2, 1)?),
        ("4", DualityContext::euclidean(3, 1)?),
        ("2,2", DualityContext::euclidean(3, 1)?),
        ("3", DualityContext::hermitian(2, 1)?),
        ("5", DualityContext::hermitian(2, 1)?),
        ("4", DualityContext::hermitian(3, 1)?),
    ];
    for (spec, ctx) in cases {
        let r = verify_counts(&spec.parse()?, ctx, Capacity::default())?;
        println!(
            "GF({:>2})[{spec:<3}] {:<9}: {:>3} ideals, {:>2} LCD, {:>2} summands, formula {:>2}, agree: {}",
            r.field_size, ctx.variant(), r.ideal_total, r.lcd_total, r.summand_total, r.formula_lcd, r.agreement
        );
    }
    print!(
        "\n{}",
        verify_counts(
            &"7".parse()?,
            DualityContext::euclidean(2, 1)?,
            Capacity::default()
        )?
        .render_text()
    );
    Ok(())
}
