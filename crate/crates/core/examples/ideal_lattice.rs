// Exhaustive ideal lattices: the chain ring GF(2)[Z_4], the semisimple
// GF(2)[Z_7], and which ideals are complementary dual or direct summands.

use abelian_lcd::algebra::GroupAlgebra;
use abelian_lcd::{build_algebra, build_field, Variant};

fn show(alg: &GroupAlgebra) -> Result<(), abelian_lcd::Error> {
    let ideals = alg.enumerate_ideals()?;
    println!(
        "GF({})[{}]: {} ideals",
        alg.field().size(),
        alg.group(),
        ideals.len()
    );
    for c in &ideals {
        println!(
            "  dim {}  LCD {:<5}  summand {:<5}  {:?}",
            c.dimension(),
            alg.is_lcd(c, Variant::Euclidean, 1)?,
            alg.is_direct_summand(c, &ideals),
            c.basis()
        );
    }
    Ok(())
}

fn main() -> Result<(), abelian_lcd::Error> {
    let f2 = build_field(2, 1)?;
    let chain = build_algebra(&"4".parse()?, &f2)?;
    show(&chain)?;
    println!(
        "  augmentation ideal nilpotent of index {}\n",
        chain.nilpotency_index()?
    );

    let z7 = build_algebra(&"7".parse()?, &f2)?;
    show(&z7)?;
    let dims: Vec<usize> = z7.minimal_ideals()?.iter().map(|c| c.dimension()).collect();
    println!("  minimal ideals of dimensions {dims:?}");
    Ok(())
}
