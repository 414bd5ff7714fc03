//! Finite abelian groups written as products of cyclic factors.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::arith::{self, divisors, factorize, mobius, partitions};
use crate::error::{Error, Result};

/// `Z_{m_1} x ... x Z_{m_s}`, factors kept in the order they were given.
///
/// The empty factor list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianGroup {
    factors: Vec<u64>,
}

/// An element of an [`AbelianGroup`], one residue per cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn new(coords: Vec<u64>) -> Self {
        GroupElement { coords }
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl AbelianGroup {
    /// Builds the group from its cyclic factors; every factor must be at
    /// least 2.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if let Some(bad) = factors.iter().find(|&&m| m < 2) {
            return Err(Error::domain(format!(
                "cyclic factor {bad} is smaller than 2"
            )));
        }
        Ok(AbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        AbelianGroup::default()
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        match n {
            0 => Err(Error::domain("cyclic group of order 0")),
            1 => Ok(Self::trivial()),
            _ => Ok(AbelianGroup { factors: vec![n] }),
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, &m| acc.lcm(&m))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::new(vec![0; self.factors.len()])
    }

    /// Checks that `a` has the right arity and in-range coordinates.
    pub fn check(&self, a: &GroupElement) -> Result<()> {
        if a.coords.len() != self.factors.len() {
            return Err(Error::domain(format!(
                "element {a} has {} coordinates, group has {} factors",
                a.coords.len(),
                self.factors.len()
            )));
        }
        for (c, m) in a.coords.iter().zip(&self.factors) {
            if c >= m {
                return Err(Error::domain(format!(
                    "coordinate {c} of {a} is out of range for Z_{m}"
                )));
            }
        }
        Ok(())
    }

    /// Element with mixed-radix index `index`, the first coordinate most
    /// significant. Indices enumerate the group in lexicographic order.
    pub fn element_at(&self, mut index: u64) -> GroupElement {
        let mut coords = vec![0; self.factors.len()];
        for (slot, &m) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = index % m;
            index /= m;
        }
        GroupElement::new(coords)
    }

    pub fn index_of(&self, a: &GroupElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &m)| acc * m + c)
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .zip(&self.factors)
                .map(|((&x, &y), &m)| (x + y) % m)
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &m)| (m - x) % m)
                .collect(),
        )
    }

    /// `k * a`, computed componentwise.
    pub fn scalar_mul(&self, k: u64, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.scalar_mul_unchecked(k, a))
    }

    pub(crate) fn scalar_mul_unchecked(&self, k: u64, a: &GroupElement) -> GroupElement {
        GroupElement::new(
            a.coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &m)| ((k % m) as u128 * x as u128 % m as u128) as u64)
                .collect(),
        )
    }

    /// Additive order of `a`: the lcm of `m_i / gcd(m_i, c_i)`.
    pub fn element_order(&self, a: &GroupElement) -> Result<u64> {
        self.check(a)?;
        Ok(self.element_order_unchecked(a))
    }

    pub(crate) fn element_order_unchecked(&self, a: &GroupElement) -> u64 {
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (&c, &m)| acc.lcm(&(m / m.gcd(&c))))
    }

    /// Splits `G = A x P` with `p` not dividing `|A|` and `P` the Sylow
    /// `p`-subgroup. Each factor is split on its own, so the result keeps
    /// the factor order of `self`.
    pub fn sylow_split(&self, p: u64) -> Result<(AbelianGroup, AbelianGroup)> {
        arith::require_prime(p)?;
        let mut coprime = Vec::new();
        let mut sylow = Vec::new();
        for &m in &self.factors {
            let t = arith::valuation(m, p);
            let pk = p.pow(t);
            if m / pk > 1 {
                coprime.push(m / pk);
            }
            if pk > 1 {
                sylow.push(pk);
            }
        }
        Ok((
            AbelianGroup { factors: coprime },
            AbelianGroup { factors: sylow },
        ))
    }

    /// Number of elements of order exactly `d`, by Möbius inversion of the
    /// count `prod gcd(e, m_i)` of elements whose order divides `e`.
    pub fn count_elements_of_order(&self, d: u64) -> Result<u64> {
        if d == 0 {
            return Err(Error::domain("element order must be positive"));
        }
        if !self.exponent().is_multiple_of(d) {
            return Ok(0);
        }
        let total: i64 = divisors(d)
            .into_iter()
            .map(|e| {
                let dividing: u64 = self.factors.iter().map(|&m| e.gcd(&m)).product();
                mobius(d / e) * dividing as i64
            })
            .sum();
        u64::try_from(total)
            .map_err(|_| Error::consistency(format!("negative element count for order {d}")))
    }

    /// Spec string form: `"1"` for the trivial group, otherwise the
    /// factors joined by commas.
    pub fn spec(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Reads `"1"` or a comma-separated list of integers `>= 2`. Whitespace
/// around tokens is ignored.
pub fn parse_group_spec(text: &str) -> Result<AbelianGroup> {
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(AbelianGroup::trivial());
    }
    let mut factors = Vec::new();
    for token in trimmed.split(',') {
        let tok = token.trim();
        match tok.parse::<u64>() {
            Ok(m) if m >= 2 => factors.push(m),
            _ => {
                return Err(Error::Parse {
                    token: tok.to_string(),
                })
            }
        }
    }
    Ok(AbelianGroup { factors })
}

/// One representative per isomorphism class of abelian groups of order
/// `n`, in primary-decomposition form.
///
/// Primes are taken in ascending order and, for each prime, the exponent
/// partitions in decreasing lexicographic order; the first prime varies
/// slowest. Order 9 gives `[Z_9, Z_3 x Z_3]`.
pub fn abelian_groups_of_order(n: u64) -> Result<Vec<AbelianGroup>> {
    if n == 0 {
        return Err(Error::domain("group order must be positive"));
    }
    let mut groups: Vec<Vec<u64>> = vec![Vec::new()];
    for (q, e) in factorize(n) {
        let mut next = Vec::new();
        for prefix in &groups {
            for part in partitions(e) {
                let mut factors = prefix.clone();
                factors.extend(part.iter().map(|&k| q.pow(k)));
                next.push(factors);
            }
        }
        groups = next;
    }
    Ok(groups
        .into_iter()
        .map(|factors| AbelianGroup { factors })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(spec: &str) -> AbelianGroup {
        spec.parse().unwrap()
    }

    fn el(c: &[u64]) -> GroupElement {
        GroupElement::new(c.to_vec())
    }

    fn brute_order(group: &AbelianGroup, a: &GroupElement) -> u64 {
        let mut x = a.clone();
        let mut d = 1;
        while !x.is_zero() {
            x = group.add(&x, a);
            d += 1;
        }
        d
    }

    #[test]
    fn parse_examples() {
        assert_eq!(g("3,3").factors(), &[3, 3]);
        assert!(g("1").is_trivial());
        assert_eq!(g("1").order(), 1);
        let z45 = g("45");
        assert_eq!(z45.exponent(), 45);
        assert_eq!(g(" 4 , 2 ").factors(), &[4, 2]);
    }

    #[test]
    fn parse_errors_name_token() {
        for (text, token) in [
            ("3,x", "x"),
            ("0", "0"),
            ("3,,3", ""),
            ("-2", "-2"),
            ("3,1", "1"),
        ] {
            assert_eq!(
                parse_group_spec(text),
                Err(Error::Parse {
                    token: token.to_string()
                }),
                "{text}"
            );
        }
    }

    #[test]
    fn element_order_examples() {
        assert_eq!(g("9").element_order(&el(&[3])), Ok(3));
        assert_eq!(g("3,3").element_order(&el(&[0, 0])), Ok(1));
        let z4z2 = g("4,2");
        assert_eq!(
            z4z2.element_order(&el(&[2, 1])),
            Ok(brute_order(&z4z2, &el(&[2, 1])))
        );
        assert_eq!(z4z2.element_order(&el(&[2, 1])), Ok(2));
        assert!(matches!(
            g("9").element_order(&el(&[9])),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            g("9").element_order(&el(&[1, 0])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn scalar_mul_examples() {
        assert_eq!(g("7").scalar_mul(2, &el(&[3])), Ok(el(&[6])));
        assert_eq!(g("7").scalar_mul(0, &el(&[3])), Ok(el(&[0])));
        let z33 = g("3,3");
        let mut rep = z33.zero();
        for _ in 0..4 {
            rep = z33.add(&rep, &el(&[1, 2]));
        }
        assert_eq!(z33.scalar_mul(4, &el(&[1, 2])), Ok(rep.clone()));
        assert_eq!(rep, el(&[1, 2]));
    }

    #[test]
    fn sylow_split_examples() {
        assert_eq!(g("12").sylow_split(2), Ok((g("3"), g("4"))));
        assert_eq!(g("3,3").sylow_split(2), Ok((g("3,3"), g("1"))));
        let (a, p) = g("6,2").sylow_split(2).unwrap();
        assert_eq!((a.clone(), p.clone()), (g("3"), g("2,2")));
        assert_eq!(a.order() * p.order(), 12);
        assert!(matches!(g("6").sylow_split(4), Err(Error::Domain(_))));
    }

    #[test]
    fn element_counts() {
        for n in [5u64, 12, 36] {
            for d in divisors(n) {
                assert_eq!(
                    AbelianGroup::cyclic(n).unwrap().count_elements_of_order(d),
                    Ok(arith::euler_phi(d))
                );
            }
        }
        assert_eq!(g("4,6").count_elements_of_order(1), Ok(1));
        assert_eq!(g("1").count_elements_of_order(1), Ok(1));
        assert_eq!(g("3,3").count_elements_of_order(3), Ok(8));
        assert_eq!(g("3,3").count_elements_of_order(9), Ok(0));
        assert!(matches!(
            g("3").count_elements_of_order(0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn group_enumeration_examples() {
        assert_eq!(abelian_groups_of_order(9), Ok(vec![g("9"), g("3,3")]));
        assert_eq!(abelian_groups_of_order(7), Ok(vec![g("7")]));
        assert_eq!(abelian_groups_of_order(27).unwrap().len(), 3);
        assert_eq!(abelian_groups_of_order(1), Ok(vec![g("1")]));
        assert_eq!(abelian_groups_of_order(45), Ok(vec![g("9,5"), g("3,3,5")]));
    }
}
