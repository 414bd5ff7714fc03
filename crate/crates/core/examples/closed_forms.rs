// Closed forms for (Z_{2^k})^s and (Z_{q^k})^s next to the general divisor
// sum.

use abelian_lcd::cyclotomic::{
    r_counts_2group_euclidean, r_counts_2group_hermitian, r_counts_formula,
    r_counts_qgroup_euclidean, r_counts_qgroup_hermitian,
};
use abelian_lcd::{AbelianGroup, DualityContext};

fn power(m: u64, s: u32) -> AbelianGroup {
    AbelianGroup::new(vec![m; s as usize]).unwrap()
}

fn main() -> Result<(), abelian_lcd::Error> {
    let (p, nu) = (3, 1);
    for (k, s) in [(1, 1), (2, 1), (3, 2)] {
        let g = power(1 << k, s);
        let e = r_counts_2group_euclidean(p, nu, k, s)?;
        let h = r_counts_2group_hermitian(p, nu, k, s)?;
        println!(
            "(Z_{})^{s}, p = {p}: Euclidean {e:?} (general {:?}), Hermitian {h:?} (general {:?})",
            1 << k,
            r_counts_formula(&g, DualityContext::euclidean(p, nu)?)?,
            r_counts_formula(&g, DualityContext::hermitian(p, nu)?)?,
        );
    }

    let p = 2;
    for (q, k, s) in [(3u64, 2u32, 1u32), (5, 1, 2), (7, 2, 2)] {
        let g = power(q.pow(k), s);
        println!(
            "(Z_{})^{s}, p = {p}: Euclidean {:?}, Hermitian {:?}, general {:?} / {:?}",
            q.pow(k),
            r_counts_qgroup_euclidean(p, 1, q, k, s)?,
            r_counts_qgroup_hermitian(p, 1, q, k, s)?,
            r_counts_formula(&g, DualityContext::euclidean(p, 1)?)?,
            r_counts_formula(&g, DualityContext::hermitian(p, 1)?)?,
        );
    }
    Ok(())
}
