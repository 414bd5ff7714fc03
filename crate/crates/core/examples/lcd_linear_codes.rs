// Row reduction, duals and the rank test for complementary duality on
// plain linear codes.

use abelian_lcd::linalg::{null_space, rank, rref, stacked_rank};
use abelian_lcd::{build_field, GfMatrix};

fn main() -> Result<(), abelian_lcd::Error> {
    let f2 = build_field(2, 1)?;
    let hamming = GfMatrix::from_indices(
        &f2,
        &[
            &[1, 0, 0, 0, 0, 1, 1],
            &[0, 1, 0, 0, 1, 0, 1],
            &[0, 0, 1, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1, 1, 1],
        ],
    )?;
    let repetition = GfMatrix::from_indices(&f2, &[&[1, 1, 1, 1, 1, 1, 1]])?;
    let even_pair = GfMatrix::from_indices(&f2, &[&[1, 1, 0, 0, 0, 0, 0]])?;

    for (name, g) in [
        ("[7,4] Hamming", &hamming),
        ("[7,1] repetition", &repetition),
        ("[7,1] weight 2", &even_pair),
    ] {
        let dual = null_space(&f2, g);
        let lcd = stacked_rank(&f2, g, &dual)? == g.cols();
        println!(
            "{name:<18} k = {}, dual k = {}, LCD: {lcd}",
            rank(&f2, g),
            dual.rows()
        );
    }

    let f3 = build_field(3, 1)?;
    let m = GfMatrix::from_indices(&f3, &[&[2, 1, 0, 1], &[1, 1, 1, 0], &[0, 2, 1, 2]])?;
    let r = rref(&f3, &m);
    println!(
        "\nover GF(3): rref = {:?}, rank {}, pivots {:?}",
        r.matrix, r.rank, r.pivots
    );
    println!("null space = {:?}", null_space(&f3, &m));
    Ok(())
}
