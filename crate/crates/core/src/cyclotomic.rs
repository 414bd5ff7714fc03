//! Cyclotomic classes of a finite abelian group and their Euclidean and
//! Hermitian types.
//!
//! For `p` prime and `gcd(p, |A|) = 1` the `q`-cyclotomic class of `a` is
//! the orbit `{q^i * a}`. Euclidean classes use `q = p^nu` and pair the
//! class of `a` with the class of `-a`; Hermitian classes use
//! `q = p^(2 nu)` and pair `a` with `-p^nu * a`. A class equal to its
//! partner is type I (resp. I'), otherwise the two classes form a type II
//! (resp. II') pair. The number of complementary dual codes is
//! `2^(r_I + r_II)`.
//!
//! The counts are produced three ways: by enumerating the partition, by
//! summing over divisors of the exponent, and by closed forms for
//! `(Z_{2^k})^s` and `(Z_{q^k})^s`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::arith::{self, checked_pow, divisors, multiplicative_order, pow_mod};
use crate::error::{Error, Result};
use crate::group::{AbelianGroup, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Euclidean,
    Hermitian,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Euclidean => "euclidean",
            Variant::Hermitian => "hermitian",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The alphabet `F_{p^nu}` (Euclidean) or `F_{p^(2 nu)}` (Hermitian)
/// together with the inner product in use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DualityContext {
    p: u64,
    nu: u32,
    variant: Variant,
}

impl DualityContext {
    pub fn new(p: u64, nu: u32, variant: Variant) -> Result<Self> {
        arith::require_prime(p)?;
        if nu == 0 {
            return Err(Error::domain("nu must be a positive integer"));
        }
        Ok(DualityContext { p, nu, variant })
    }

    pub fn euclidean(p: u64, nu: u32) -> Result<Self> {
        Self::new(p, nu, Variant::Euclidean)
    }

    pub fn hermitian(p: u64, nu: u32) -> Result<Self> {
        Self::new(p, nu, Variant::Hermitian)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Exponent `e` of the class multiplier `p^e`: `nu` or `2 nu`.
    pub fn field_degree(&self) -> u32 {
        match self.variant {
            Variant::Euclidean => self.nu,
            Variant::Hermitian => 2 * self.nu,
        }
    }

    /// Size of the alphabet field, which is also the class multiplier.
    pub fn field_size(&self) -> Result<u64> {
        checked_pow(self.p, self.field_degree())
    }

    /// The class multiplier reduced modulo `m`.
    pub fn multiplier_mod(&self, m: u64) -> u64 {
        pow_mod(self.p, self.field_degree() as u64, m)
    }

    /// `t mod m` such that the partner class of `a` is the class of `t * a`:
    /// `-1` for Euclidean, `-p^nu` for Hermitian.
    pub fn twist_mod(&self, m: u64) -> u64 {
        let s = match self.variant {
            Variant::Euclidean => 1 % m,
            Variant::Hermitian => pow_mod(self.p, self.nu as u64, m),
        };
        (m - s) % m
    }

    /// `chi` (Euclidean) or `lambda` (Hermitian) of `d`.
    pub fn type_indicator(&self, d: u64) -> Result<bool> {
        match self.variant {
            Variant::Euclidean => chi(d, self.p, self.nu),
            Variant::Hermitian => lambda_fn(d, self.p, self.nu),
        }
    }

    fn require_coprime(&self, group: &AbelianGroup) -> Result<()> {
        if group.order().is_multiple_of(self.p) {
            return Err(Error::domain(format!(
                "p = {} divides |A| = {}; the algebra is not semisimple",
                self.p,
                group.order()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassType {
    I,
    II,
    IPrime,
    IIPrime,
    Untyped,
}

impl ClassType {
    pub fn is_self_paired(self) -> bool {
        matches!(self, ClassType::I | ClassType::IPrime)
    }

    pub fn label(self) -> &'static str {
        match self {
            ClassType::I => "I",
            ClassType::II => "II",
            ClassType::IPrime => "I'",
            ClassType::IIPrime => "II'",
            ClassType::Untyped => "-",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicClass {
    /// Lexicographically smallest member.
    pub representative: GroupElement,
    /// Members in lexicographic order.
    pub members: Vec<GroupElement>,
    pub type_tag: ClassType,
}

impl CyclotomicClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// `r_I` and `r_II` (or `r_I'` and `r_II'`): the number of self-paired
/// classes and the number of class pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RCounts {
    pub r_one: u64,
    pub r_two: u64,
}

impl RCounts {
    pub fn new(r_one: u64, r_two: u64) -> Self {
        RCounts { r_one, r_two }
    }

    pub fn total(&self) -> u64 {
        self.r_one + self.r_two
    }
}

impl From<(u64, u64)> for RCounts {
    fn from((r_one, r_two): (u64, u64)) -> Self {
        RCounts { r_one, r_two }
    }
}

/// A complete set of cyclotomic classes, typed, with the pairing of the
/// type II classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedPartition {
    pub context: DualityContext,
    pub classes: Vec<CyclotomicClass>,
    pub counts: RCounts,
    /// Partner index for every type II / II' class.
    pub pairing: BTreeMap<usize, usize>,
}

impl TypedPartition {
    pub fn r_one(&self) -> u64 {
        self.counts.r_one
    }

    pub fn r_two(&self) -> u64 {
        self.counts.r_two
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(CyclotomicClass::size).collect()
    }
}

fn require_unit(group: &AbelianGroup, q: u64) -> Result<()> {
    if q.gcd(&group.order()) != 1 {
        return Err(Error::domain(format!(
            "multiplier {q} is not coprime to |A| = {}",
            group.order()
        )));
    }
    Ok(())
}

/// The orbit of `a` under multiplication by `q`.
pub fn cyclotomic_class(group: &AbelianGroup, q: u64, a: &GroupElement) -> Result<CyclotomicClass> {
    require_unit(group, q)?;
    group.check(a)?;
    let mut members = orbit(group, q, a);
    let expected = multiplicative_order(q, group.element_order_unchecked(a))?;
    if members.len() as u64 != expected {
        return Err(Error::consistency(format!(
            "orbit of {a} has {} members, ord_{}({q}) = {expected}",
            members.len(),
            group.element_order_unchecked(a)
        )));
    }
    members.sort();
    Ok(CyclotomicClass {
        representative: members[0].clone(),
        members,
        type_tag: ClassType::Untyped,
    })
}

fn orbit(group: &AbelianGroup, q: u64, a: &GroupElement) -> Vec<GroupElement> {
    let mut members = vec![a.clone()];
    let mut x = group.scalar_mul_unchecked(q, a);
    while &x != a {
        let next = group.scalar_mul_unchecked(q, &x);
        members.push(x);
        x = next;
    }
    members
}

/// Partition of `A` into `q`-cyclotomic classes, sorted by
/// (order of representative, representative).
pub fn class_partition(group: &AbelianGroup, q: u64) -> Result<Vec<CyclotomicClass>> {
    require_unit(group, q)?;
    let mut seen = vec![false; group.order() as usize];
    let mut classes = Vec::new();
    for a in group.elements() {
        if seen[group.index_of(&a) as usize] {
            continue;
        }
        let class = cyclotomic_class(group, q, &a)?;
        for m in &class.members {
            seen[group.index_of(m) as usize] = true;
        }
        classes.push(class);
    }
    classes.sort_by_cached_key(|c| {
        (
            group.element_order_unchecked(&c.representative),
            c.representative.clone(),
        )
    });
    Ok(classes)
}

/// 1 iff `d` divides `p^(nu i) + 1` for some `i >= 1`.
pub fn chi(d: u64, p: u64, nu: u32) -> Result<bool> {
    scan_minus_one(d, p, nu, false)
}

/// 1 iff `d` divides `p^(nu i) + 1` for some odd `i >= 1`.
pub fn lambda_fn(d: u64, p: u64, nu: u32) -> Result<bool> {
    scan_minus_one(d, p, nu, true)
}

fn scan_minus_one(d: u64, p: u64, nu: u32, odd_only: bool) -> Result<bool> {
    if d == 0 {
        return Err(Error::domain("d must be positive"));
    }
    if p < 2 || d.is_multiple_of(p) {
        return Err(Error::domain(format!("p = {p} divides d = {d}")));
    }
    let step = pow_mod(p, nu as u64, d);
    let period = multiplicative_order(step, d)?;
    // Residues of p^(nu i) repeat with this period; two periods cover both
    // parities of i.
    let bound = if odd_only { 2 * period } else { period };
    let mut x = 1 % d;
    for i in 1..=bound {
        x = ((x as u128 * step as u128) % d as u128) as u64;
        if (odd_only && i % 2 == 0) || !(x + 1).is_multiple_of(d) {
            continue;
        }
        return Ok(true);
    }
    Ok(false)
}

/// Typed partition with respect to `ctx`: classes under `p^nu`
/// (Euclidean) or `p^(2 nu)` (Hermitian).
///
/// Each class type is decided from the partition itself and then checked
/// against `chi` / `lambda` of the representative's order; disagreement is
/// reported as [`Error::Consistency`].
pub fn classify(group: &AbelianGroup, ctx: DualityContext) -> Result<TypedPartition> {
    ctx.require_coprime(group)?;
    let exp = group.exponent();
    let q = ctx.multiplier_mod(exp);
    let twist = ctx.twist_mod(exp);
    let mut classes = class_partition(group, q)?;

    let mut class_of = vec![0usize; group.order() as usize];
    for (i, c) in classes.iter().enumerate() {
        for m in &c.members {
            class_of[group.index_of(m) as usize] = i;
        }
    }

    let (self_tag, paired_tag) = match ctx.variant {
        Variant::Euclidean => (ClassType::I, ClassType::II),
        Variant::Hermitian => (ClassType::IPrime, ClassType::IIPrime),
    };
    let mut pairing = BTreeMap::new();
    for (i, class) in classes.iter_mut().enumerate() {
        let image = group.scalar_mul_unchecked(twist, &class.representative);
        let partner = class_of[group.index_of(&image) as usize];
        let by_orbit = partner == i;
        let by_indicator =
            ctx.type_indicator(group.element_order_unchecked(&class.representative))?;
        if by_orbit != by_indicator {
            return Err(Error::consistency(format!(
                "class of {} in {group}: orbit test says {}, order test says {}",
                class.representative,
                if by_orbit { "self-paired" } else { "paired" },
                if by_indicator {
                    "self-paired"
                } else {
                    "paired"
                },
            )));
        }
        if by_orbit {
            class.type_tag = self_tag;
        } else {
            class.type_tag = paired_tag;
            pairing.insert(i, partner);
        }
    }

    for (&i, &j) in &pairing {
        if pairing.get(&j) != Some(&i) || classes[i].size() != classes[j].size() {
            return Err(Error::consistency(format!(
                "pairing of classes {i} and {j} in {group} is not a size-preserving involution"
            )));
        }
    }
    let r_one = classes.len() - pairing.len();
    let counts = RCounts::new(r_one as u64, pairing.len() as u64 / 2);
    Ok(TypedPartition {
        context: ctx,
        classes,
        counts,
        pairing,
    })
}

pub fn classify_euclidean(group: &AbelianGroup, p: u64, nu: u32) -> Result<TypedPartition> {
    classify(group, DualityContext::euclidean(p, nu)?)
}

pub fn classify_hermitian(group: &AbelianGroup, p: u64, nu: u32) -> Result<TypedPartition> {
    classify(group, DualityContext::hermitian(p, nu)?)
}

fn exact_div(num: u64, den: u64, what: &str) -> Result<u64> {
    if den == 0 || !num.is_multiple_of(den) {
        return Err(Error::consistency(format!(
            "{what}: {num} / {den} is not exact"
        )));
    }
    Ok(num / den)
}

/// `(r_one, r_two)` from the divisor sum over the exponent `N` of `A`:
/// elements of order `d` fall into `N_A(d) / ord_d(multiplier)` classes, all
/// self-paired when the type indicator of `d` is 1 and paired otherwise.
pub fn r_counts_formula(group: &AbelianGroup, ctx: DualityContext) -> Result<RCounts> {
    r_counts_with(group.exponent(), ctx, |d| group.count_elements_of_order(d))
}

/// Same divisor sum for an arbitrary element-count function on the divisors
/// of `exponent`.
pub(crate) fn r_counts_with(
    exponent: u64,
    ctx: DualityContext,
    elements_of_order: impl Fn(u64) -> Result<u64>,
) -> Result<RCounts> {
    if exponent.is_multiple_of(ctx.p) {
        return Err(Error::domain(format!(
            "p = {} divides the exponent {exponent}",
            ctx.p
        )));
    }
    let mut r_one = 0u64;
    let mut paired_classes = 0u64;
    for d in divisors(exponent) {
        let count = elements_of_order(d)?;
        let size = multiplicative_order(ctx.multiplier_mod(d), d)?;
        let classes = exact_div(count, size, &format!("classes of order {d}"))?;
        if ctx.type_indicator(d)? {
            r_one += classes;
        } else {
            paired_classes += classes;
        }
    }
    let r_two = exact_div(paired_classes, 2, "paired classes")?;
    Ok(RCounts::new(r_one, r_two))
}

/// `|A_{q^i}| = q^(i s) - q^((i-1) s)`, the number of elements of order
/// `q^i` in `(Z_{q^k})^s`.
fn layer_size(q: u64, i: u32, s: u32) -> Result<u64> {
    Ok(checked_pow(q, i * s)? - checked_pow(q, (i - 1) * s)?)
}

/// Largest `r <= k` with `2^r | p^nu + 1`.
fn two_adic_cap(p: u64, nu: u32, k: u32) -> u32 {
    (0..=k)
        .rev()
        .find(|&r| {
            let m = 1u64 << r;
            (pow_mod(p, nu as u64, m) + 1).is_multiple_of(m)
        })
        .unwrap_or(0)
}

fn require_odd_prime(p: u64) -> Result<()> {
    arith::require_prime(p)?;
    if p == 2 {
        return Err(Error::domain("p must be odd for (Z_{2^k})^s"));
    }
    Ok(())
}

fn require_q_group(p: u64, q: u64) -> Result<()> {
    arith::require_prime(p)?;
    if q == 2 || !arith::is_prime(q) {
        return Err(Error::domain(format!("q = {q} must be an odd prime")));
    }
    if q == p {
        return Err(Error::domain(format!("q = {q} must differ from p")));
    }
    Ok(())
}

/// Euclidean counts for `A = (Z_{2^k})^s`, `p` odd. `k = 0` or `s = 0` is
/// the trivial group.
pub fn r_counts_2group_euclidean(p: u64, nu: u32, k: u32, s: u32) -> Result<RCounts> {
    require_odd_prime(p)?;
    if k == 0 || s == 0 {
        return Ok(RCounts::new(1, 0));
    }
    let cap = two_adic_cap(p, nu, k);
    let base = checked_pow(2, s)?;
    let r_one = base + exact_div(checked_pow(2, cap * s)? - base, 2, "r_I")?;
    let mut r_two = 0;
    for i in cap + 1..=k {
        let ord = multiplicative_order(pow_mod(p, nu as u64, 1 << i), 1 << i)?;
        r_two += exact_div(layer_size(2, i, s)?, 2 * ord, "r_II term")?;
    }
    Ok(RCounts::new(r_one, r_two))
}

/// Euclidean counts for `A = (Z_{q^k})^s`, `q` an odd prime other than
/// `p`. All nonzero classes are type I exactly when `ord_q(p^nu)` is even.
pub fn r_counts_qgroup_euclidean(p: u64, nu: u32, q: u64, k: u32, s: u32) -> Result<RCounts> {
    require_q_group(p, q)?;
    let all_self_paired = multiplicative_order(pow_mod(p, nu as u64, q), q)? % 2 == 0;
    q_layers(q, k, s, all_self_paired, |m| pow_mod(p, nu as u64, m))
}

/// Hermitian counts for `A = (Z_{2^k})^s`, `p` odd.
pub fn r_counts_2group_hermitian(p: u64, nu: u32, k: u32, s: u32) -> Result<RCounts> {
    require_odd_prime(p)?;
    if k == 0 || s == 0 {
        return Ok(RCounts::new(1, 0));
    }
    let gamma = two_adic_cap(p, nu, k);
    let r_one = checked_pow(2, gamma * s)?;
    let mut r_two = 0;
    for i in gamma + 1..=k {
        let ord = multiplicative_order(pow_mod(p, 2 * nu as u64, 1 << i), 1 << i)?;
        r_two += exact_div(layer_size(2, i, s)?, 2 * ord, "r_II' term")?;
    }
    Ok(RCounts::new(r_one, r_two))
}

/// Hermitian counts for `A = (Z_{q^k})^s`. The case split is decided by
/// typing the class of a single element of order `q`.
pub fn r_counts_qgroup_hermitian(p: u64, nu: u32, q: u64, k: u32, s: u32) -> Result<RCounts> {
    require_q_group(p, q)?;
    let zq = AbelianGroup::cyclic(q)?;
    let ctx = DualityContext::hermitian(p, nu)?;
    let a = GroupElement::new(vec![1]);
    let class = cyclotomic_class(&zq, ctx.multiplier_mod(q), &a)?;
    let partner = zq.scalar_mul_unchecked(ctx.twist_mod(q), &a);
    let all_self_paired = class.members.contains(&partner);
    q_layers(q, k, s, all_self_paired, |m| pow_mod(p, 2 * nu as u64, m))
}

fn q_layers(
    q: u64,
    k: u32,
    s: u32,
    all_self_paired: bool,
    multiplier_mod: impl Fn(u64) -> u64,
) -> Result<RCounts> {
    if k == 0 || s == 0 {
        return Ok(RCounts::new(1, 0));
    }
    let mut classes = 0;
    for i in 1..=k {
        let m = checked_pow(q, i)?;
        let ord = multiplicative_order(multiplier_mod(m), m)?;
        let den = if all_self_paired { ord } else { 2 * ord };
        classes += exact_div(layer_size(q, i, s)?, den, "layer classes")?;
    }
    Ok(if all_self_paired {
        RCounts::new(1 + classes, 0)
    } else {
        RCounts::new(1, classes)
    })
}
