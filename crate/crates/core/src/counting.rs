//! Number of complementary dual abelian codes, and the per-order tables of
//! `r_one + r_two`.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::arith::{self, euler_phi};
use crate::cyclotomic::{
    classify, r_counts_formula, r_counts_with, DualityContext, RCounts, Variant,
};
use crate::error::{Error, Result};
use crate::group::{abelian_groups_of_order, AbelianGroup};

/// Counting result for `F[G]` with `G = A x P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub group: AbelianGroup,
    pub context: DualityContext,
    /// `A`, the part of order coprime to `p`.
    pub p_prime_part: AbelianGroup,
    /// `P`, the Sylow `p`-subgroup.
    pub sylow_part: AbelianGroup,
    pub counts: RCounts,
    /// `2^(r_one + r_two)`.
    pub lcd_count: BigUint,
}

impl CountReport {
    pub fn r_one(&self) -> u64 {
        self.counts.r_one
    }

    pub fn r_two(&self) -> u64 {
        self.counts.r_two
    }

    pub fn r_total(&self) -> u64 {
        self.counts.total()
    }
}

pub(crate) fn power_of_two(r: u64) -> BigUint {
    BigUint::from(1u8) << r
}

/// Counts complementary dual codes in `F_{p^nu}[G]` (Euclidean) or
/// `F_{p^(2 nu)}[G]` (Hermitian). Only the `p'`-part of `G` matters; it is
/// classified directly and the result is cross-checked against the divisor
/// sum.
pub fn count_lcd(group: &AbelianGroup, ctx: DualityContext) -> Result<CountReport> {
    let (a, sylow) = group.sylow_split(ctx.p())?;
    let partition = classify(&a, ctx)?;
    let formula = r_counts_formula(&a, ctx)?;
    if formula != partition.counts {
        return Err(Error::consistency(format!(
            "{a}: classes give {:?}, divisor sum gives {formula:?}",
            partition.counts
        )));
    }
    Ok(CountReport {
        group: group.clone(),
        context: ctx,
        p_prime_part: a,
        sylow_part: sylow,
        counts: partition.counts,
        lcd_count: power_of_two(partition.counts.total()),
    })
}

/// [`count_lcd`] for the cyclic group `Z_n`. The `p`-part of `n` is moved
/// into the Sylow factor; the exponent is recomputed with `N(d) = phi(d)`
/// and must agree with the general route.
pub fn count_cyclic_lcd(n: u64, ctx: DualityContext) -> Result<CountReport> {
    let group = AbelianGroup::cyclic(n)?;
    let report = count_lcd(&group, ctx)?;
    let coprime = n / ctx.p().pow(arith::valuation(n, ctx.p()));
    let cyclic = r_counts_with(coprime, ctx, |d| Ok(euler_phi(d)))?;
    if cyclic != report.counts {
        return Err(Error::consistency(format!(
            "Z_{n}: totient route gives {cyclic:?}, general route gives {:?}",
            report.counts
        )));
    }
    Ok(report)
}

/// Ideals in the chain ring `F_p[Z_{p^k}]`: `p^k + 1`.
pub fn chain_ring_ideal_count(p: u64, k: u32) -> Result<u64> {
    Ok(arith::checked_pow(p, k)? + 1)
}

/// Which group orders enter a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderFilter {
    #[default]
    All,
    OddOnly,
    /// Orders not divisible by `p`.
    CoprimeToP,
}

impl OrderFilter {
    fn admits(self, n: u64, p: u64) -> bool {
        match self {
            OrderFilter::All => true,
            OrderFilter::OddOnly => n % 2 == 1,
            OrderFilter::CoprimeToP => !n.is_multiple_of(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub order: u64,
    pub group: AbelianGroup,
    pub r_total: u64,
    pub lcd_count: BigUint,
}

/// One row per abelian group of each admitted order up to `max_order`, in
/// [`abelian_groups_of_order`] order.
///
/// The trivial group is listed only when it is the sole group in range
/// (`max_order = 1`); otherwise tables start at order 2.
pub fn generate_table(
    ctx: DualityContext,
    max_order: u64,
    filter: OrderFilter,
) -> Result<Vec<TableRow>> {
    if max_order == 0 {
        return Err(Error::domain("max order must be at least 1"));
    }
    let first = if max_order == 1 { 1 } else { 2 };
    let mut rows = Vec::new();
    for n in first..=max_order {
        if !filter.admits(n, ctx.p()) {
            continue;
        }
        for group in abelian_groups_of_order(n)? {
            let report = count_lcd(&group, ctx)?;
            rows.push(TableRow {
                order: n,
                group,
                r_total: report.r_total(),
                lcd_count: report.lcd_count,
            });
        }
    }
    Ok(rows)
}

/// Tab-separated `order, group-spec, r_one + r_two` lines, with the code
/// count as a fourth column when `with_count` is set.
pub fn render_table(rows: &[TableRow], with_count: bool) -> String {
    let mut out = String::new();
    for row in rows {
        write!(out, "{}\t{}\t{}", row.order, row.group, row.r_total).unwrap();
        if with_count {
            write!(out, "\t{}", row.lcd_count).unwrap();
        }
        out.push('\n');
    }
    out
}

/// The stored tables for `F_2` (Euclidean) and `F_4` (Hermitian), odd
/// orders below 50, values as printed in the original tables.
pub const GOLDEN_EUCLIDEAN_F2: &str = include_str!("../tables/table1.tsv");
pub const GOLDEN_HERMITIAN_F4: &str = include_str!("../tables/table2.tsv");

/// Golden table for `ctx`, if one is stored.
pub fn golden_table(ctx: DualityContext) -> Option<&'static str> {
    match (ctx.p(), ctx.nu(), ctx.variant()) {
        (2, 1, Variant::Euclidean) => Some(GOLDEN_EUCLIDEAN_F2),
        (2, 1, Variant::Hermitian) => Some(GOLDEN_HERMITIAN_F4),
        _ => None,
    }
}

/// A line where regenerated and stored tables differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableMismatch {
    pub line: usize,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

/// Line-by-line comparison of two rendered tables.
pub fn diff_tables(expected: &str, actual: &str) -> Vec<TableMismatch> {
    let exp: Vec<&str> = expected.lines().collect();
    let act: Vec<&str> = actual.lines().collect();
    (0..exp.len().max(act.len()))
        .filter_map(|i| {
            let e = exp.get(i).copied();
            let a = act.get(i).copied();
            (e != a).then(|| TableMismatch {
                line: i + 1,
                expected: e.map(str::to_string),
                actual: a.map(str::to_string),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(spec: &str) -> AbelianGroup {
        spec.parse().unwrap()
    }

    fn e21() -> DualityContext {
        DualityContext::euclidean(2, 1).unwrap()
    }

    #[test]
    fn count_examples() {
        let r = count_lcd(&g("3"), e21()).unwrap();
        assert_eq!((r.r_total(), r.lcd_count.clone()), (2, BigUint::from(4u8)));
        let r = count_lcd(&g("3,2"), e21()).unwrap();
        assert_eq!(r.lcd_count, BigUint::from(4u8));
        assert_eq!(
            (r.p_prime_part.clone(), r.sylow_part.clone()),
            (g("3"), g("2"))
        );
        let r = count_lcd(&g("1"), DualityContext::hermitian(5, 2).unwrap()).unwrap();
        assert_eq!(r.lcd_count, BigUint::from(2u8));
    }

    #[test]
    fn lcd_count_is_arbitrary_precision() {
        let r = count_lcd(&g("3,3,3,3,3"), DualityContext::hermitian(2, 1).unwrap()).unwrap();
        assert_eq!(r.r_total(), 243);
        assert_eq!(r.lcd_count, BigUint::from(1u8) << 243u32);
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(
            count_cyclic_lcd(7, e21()).unwrap().lcd_count,
            BigUint::from(4u8)
        );
        assert_eq!(
            count_cyclic_lcd(14, e21()).unwrap().lcd_count,
            BigUint::from(4u8)
        );
        let h = DualityContext::hermitian(2, 1).unwrap();
        assert_eq!(
            count_cyclic_lcd(3, h).unwrap().lcd_count,
            BigUint::from(8u8)
        );
        assert_eq!(
            count_cyclic_lcd(8, e21()).unwrap().lcd_count,
            BigUint::from(2u8)
        );
    }

    #[test]
    fn chain_ring_examples() {
        assert_eq!(chain_ring_ideal_count(2, 2), Ok(5));
        assert_eq!(chain_ring_ideal_count(3, 1), Ok(4));
        assert_eq!(chain_ring_ideal_count(2, 0), Ok(2));
    }

    #[test]
    fn trivial_table() {
        let rows = generate_table(e21(), 1, OrderFilter::OddOnly).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].group.is_trivial());
        assert_eq!(rows[0].r_total, 1);
        assert_eq!(render_table(&rows, true), "1\t1\t1\t2\n");
    }

    #[test]
    fn filters() {
        let odd = generate_table(e21(), 12, OrderFilter::OddOnly).unwrap();
        assert!(odd.iter().all(|r| r.order % 2 == 1));
        let p3 = DualityContext::euclidean(3, 1).unwrap();
        let coprime = generate_table(p3, 12, OrderFilter::CoprimeToP).unwrap();
        assert!(coprime.iter().all(|r| r.order % 3 != 0));
        let all = generate_table(e21(), 8, OrderFilter::All).unwrap();
        // orders 2..=8: 1+1+2+1+1+1+3 groups
        assert_eq!(all.len(), 10);
    }

    #[test]
    fn golden_tables_shape() {
        for golden in [GOLDEN_EUCLIDEAN_F2, GOLDEN_HERMITIAN_F4] {
            assert_eq!(golden.lines().count(), 30);
            for line in golden.lines() {
                let cols: Vec<_> = line.split('\t').collect();
                assert_eq!(cols.len(), 3, "{line}");
                let group: AbelianGroup = cols[1].parse().unwrap();
                assert_eq!(group.order().to_string(), cols[0]);
            }
        }
    }

    #[test]
    fn diff_reports_changed_and_missing_lines() {
        let d = diff_tables("a\nb\nc\n", "a\nx\n");
        assert_eq!(d.len(), 2);
        assert_eq!(d[0].line, 2);
        assert_eq!(d[1].actual, None);
    }
}
