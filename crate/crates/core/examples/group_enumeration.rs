// Abelian groups of a given order and the element-order statistics that
// drive the counting formulas.

use abelian_lcd::{abelian_groups_of_order, AbelianGroup};

fn main() -> Result<(), abelian_lcd::Error> {
    for n in [8, 36, 45] {
        let groups = abelian_groups_of_order(n)?;
        let specs: Vec<String> = groups.iter().map(ToString::to_string).collect();
        println!("order {n}: {} groups: {}", groups.len(), specs.join("  "));
    }

    let g: AbelianGroup = "4,6".parse()?;
    println!("\nG = {g}: order {}, exponent {}", g.order(), g.exponent());
    for d in [1, 2, 3, 4, 6, 12] {
        println!(
            "  elements of order {d:>2}: {}",
            g.count_elements_of_order(d)?
        );
    }
    let (a, p) = g.sylow_split(2)?;
    println!("  2'-part {a}, Sylow 2-subgroup {p}");

    let x = g.element_at(7);
    println!("  element #7 = {x}, order {}", g.element_order(&x)?);
    Ok(())
}
