// Cyclotomic classes of Z_3 x Z_3 under multiplication by 2 and by 4,
// typed for Euclidean and Hermitian duality.

use abelian_lcd::cyclotomic::{chi, lambda_fn};
use abelian_lcd::{classify, AbelianGroup, DualityContext};

fn main() -> Result<(), abelian_lcd::Error> {
    let g: AbelianGroup = "3,3".parse()?;
    for ctx in [
        DualityContext::euclidean(2, 1)?,
        DualityContext::hermitian(2, 1)?,
    ] {
        let part = classify(&g, ctx)?;
        println!("{} over GF({})", ctx.variant(), ctx.field_size()?);
        for (i, c) in part.classes.iter().enumerate() {
            let members: Vec<String> = c.members.iter().map(ToString::to_string).collect();
            let partner = part
                .pairing
                .get(&i)
                .map(|&j| format!(" <-> {}", part.classes[j].representative))
                .unwrap_or_default();
            println!(
                "  {:<4} {{{}}}{partner}",
                c.type_tag.label(),
                members.join(", ")
            );
        }
        println!("  r_one = {}, r_two = {}\n", part.r_one(), part.r_two());
    }

    // The type of a class depends only on the order d of its elements.
    for d in [3, 5, 7, 9, 15, 21] {
        println!(
            "d = {d:>2}: chi = {}, lambda = {}",
            chi(d, 2, 1)? as u8,
            lambda_fn(d, 2, 1)? as u8
        );
    }
    Ok(())
}
