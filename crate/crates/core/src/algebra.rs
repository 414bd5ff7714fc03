//! Exact group algebras `F[G]` and exhaustive enumeration of their ideals.
//!
//! This is the brute-force side of the crate: nothing here consults
//! cyclotomic classes. Ideals are found by generating the cyclic ideal of
//! every vector of `F[G]` and closing the result under sums, so the sizes
//! involved are guarded by an explicit [`Capacity`].

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::counting::count_lcd;
use crate::cyclotomic::{DualityContext, Variant};
use crate::error::{Error, Result};
use crate::field::{build_field, FieldDescriptor, FieldElement};
use crate::group::{AbelianGroup, GroupElement};
use crate::linalg::{null_space_of_basis, EchelonBasis, GfMatrix};

/// An element of `F[G]`: one coefficient per group element, in the group's
/// lexicographic element order.
pub type AlgebraElement = Vec<FieldElement>;

/// Upper bound `|F|^|G| <= 2^log2` on the algebras the oracle will touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Capacity {
    log2: u32,
}

impl Capacity {
    /// Guard for ideal enumeration.
    pub const ENUMERATION: Capacity = Capacity { log2: 20 };
    /// Guard for sweeps over every `p`-group.
    pub const P_GROUP_SWEEP: Capacity = Capacity { log2: 16 };

    pub fn from_log2(log2: u32) -> Self {
        Capacity { log2 }
    }

    pub fn log2(self) -> u32 {
        self.log2
    }

    pub fn admits(self, field_size: usize, dimension: usize) -> bool {
        vector_count(field_size, dimension).is_some_and(|v| v <= 1u128 << self.log2.min(127))
    }

    pub fn check(self, field_size: usize, dimension: usize) -> Result<()> {
        if self.admits(field_size, dimension) {
            return Ok(());
        }
        let bits = dimension as f64 * (field_size as f64).log2();
        Err(Error::Capacity(format!(
            "GF({field_size})[G] with |G| = {dimension} has {field_size}^{dimension} ~ 2^{bits:.1} vectors, \
             over the bound 2^{}",
            self.log2
        )))
    }
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity::ENUMERATION
    }
}

fn vector_count(field_size: usize, dimension: usize) -> Option<u128> {
    (field_size as u128).checked_pow(u32::try_from(dimension).ok()?)
}

/// An ideal of `F[G]`, identified by the canonical echelon basis of its
/// underlying linear code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealCode {
    basis: EchelonBasis,
}

impl IdealCode {
    fn new(basis: EchelonBasis) -> Self {
        IdealCode { basis }
    }

    pub fn dimension(&self) -> usize {
        self.basis.dim()
    }

    pub fn length(&self) -> usize {
        self.basis.cols()
    }

    /// Reduced row-echelon generator matrix.
    pub fn basis(&self) -> GfMatrix {
        self.basis.to_matrix()
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.dim() == 0
    }

    pub fn contains(&self, field: &FieldDescriptor, v: &[FieldElement]) -> bool {
        self.basis.contains(field, v)
    }

    pub fn is_subset_of(&self, field: &FieldDescriptor, other: &IdealCode) -> bool {
        self.dimension() <= other.dimension()
            && self.basis.rows().iter().all(|r| other.contains(field, r))
    }

    fn sort_key(&self) -> (usize, &[Vec<FieldElement>]) {
        (self.dimension(), self.basis.rows())
    }
}

/// `F[G]` with a fixed basis `Y^g`, `g` in lexicographic order.
#[derive(Debug, Clone)]
pub struct GroupAlgebra {
    group: AbelianGroup,
    field: FieldDescriptor,
    elements: Vec<GroupElement>,
    /// `sum[i * n + j]` is the index of `g_i + g_j`.
    sum: Vec<usize>,
    /// `neg[i]` is the index of `-g_i`.
    neg: Vec<usize>,
    /// Indices of the generators of the cyclic factors.
    generators: Vec<usize>,
    capacity: Capacity,
}

/// [`GroupAlgebra::new`] with the default enumeration capacity.
pub fn build_algebra(group: &AbelianGroup, field: &FieldDescriptor) -> Result<GroupAlgebra> {
    GroupAlgebra::new(group.clone(), field.clone(), Capacity::default())
}

impl GroupAlgebra {
    pub fn new(group: AbelianGroup, field: FieldDescriptor, capacity: Capacity) -> Result<Self> {
        let n = group.order() as usize;
        capacity.check(field.size(), n)?;
        let elements: Vec<GroupElement> = group.elements().collect();
        let mut sum = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                sum.push(group.index_of(&group.add(a, b)) as usize);
            }
        }
        let neg = elements
            .iter()
            .map(|g| group.index_of(&group.neg(g)) as usize)
            .collect();
        let generators = (0..group.factors().len())
            .map(|i| {
                let mut coords = vec![0; group.factors().len()];
                coords[i] = 1;
                group.index_of(&GroupElement::new(coords)) as usize
            })
            .collect();
        let alg = GroupAlgebra {
            group,
            field,
            elements,
            sum,
            neg,
            generators,
            capacity,
        };
        for i in 0..n {
            for j in 0..n {
                let prod = alg.multiply(&alg.basis_element(i), &alg.basis_element(j));
                if prod != alg.basis_element(alg.sum[i * n + j]) {
                    return Err(Error::consistency("Y^g Y^h != Y^(g+h)"));
                }
            }
        }
        Ok(alg)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn capacity(&self) -> Capacity {
        self.capacity
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn group_element(&self, index: usize) -> &GroupElement {
        &self.elements[index]
    }

    pub fn zero(&self) -> AlgebraElement {
        vec![FieldElement::ZERO; self.dimension()]
    }

    /// `Y^0`, the identity.
    pub fn one(&self) -> AlgebraElement {
        self.basis_element(0)
    }

    /// `Y^g` for the group element with index `index`.
    pub fn basis_element(&self, index: usize) -> AlgebraElement {
        let mut v = self.zero();
        v[index] = FieldElement::ONE;
        v
    }

    pub fn add(&self, u: &[FieldElement], v: &[FieldElement]) -> AlgebraElement {
        u.iter()
            .zip(v)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect()
    }

    pub fn sub(&self, u: &[FieldElement], v: &[FieldElement]) -> AlgebraElement {
        u.iter()
            .zip(v)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect()
    }

    pub fn scale(&self, c: FieldElement, v: &[FieldElement]) -> AlgebraElement {
        v.iter().map(|&a| self.field.mul(c, a)).collect()
    }

    /// Convolution product `(u v)_h = sum_g u_g v_(h-g)`.
    pub fn multiply(&self, u: &[FieldElement], v: &[FieldElement]) -> AlgebraElement {
        let n = self.dimension();
        let mut w = self.zero();
        for (i, &a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let k = self.sum[i * n + j];
                w[k] = self.field.add(w[k], self.field.mul(a, b));
            }
        }
        w
    }

    pub fn pow(&self, u: &[FieldElement], e: u32) -> AlgebraElement {
        (0..e).fold(self.one(), |acc, _| self.multiply(&acc, u))
    }

    /// `Y^g v`.
    pub fn shift(&self, g: usize, v: &[FieldElement]) -> AlgebraElement {
        let n = self.dimension();
        let mut w = self.zero();
        for (k, &x) in v.iter().enumerate() {
            w[self.sum[g * n + k]] = x;
        }
        w
    }

    /// Whether a subspace is closed under multiplication by every `Y^g`.
    pub fn is_ideal(&self, basis: &EchelonBasis) -> bool {
        self.generators.iter().all(|&g| {
            basis
                .rows()
                .iter()
                .all(|r| basis.contains(&self.field, &self.shift(g, r)))
        })
    }

    fn ideal_from(&self, basis: EchelonBasis) -> Result<IdealCode> {
        if !self.is_ideal(&basis) {
            return Err(Error::consistency(format!(
                "subspace of dimension {} in GF({})[{}] is not an ideal",
                basis.dim(),
                self.field.size(),
                self.group
            )));
        }
        Ok(IdealCode::new(basis))
    }

    pub fn zero_ideal(&self) -> IdealCode {
        IdealCode::new(EchelonBasis::new(self.dimension()))
    }

    pub fn whole_algebra(&self) -> IdealCode {
        self.ideal_generated_by(&self.one())
    }

    /// The smallest ideal containing `v`: the span of all `Y^g v`.
    pub fn ideal_generated_by(&self, v: &[FieldElement]) -> IdealCode {
        let mut basis = EchelonBasis::new(self.dimension());
        if v.iter().all(|x| x.is_zero()) {
            return IdealCode::new(basis);
        }
        for g in 0..self.dimension() {
            basis.insert(&self.field, self.shift(g, v));
            if basis.dim() == self.dimension() {
                break;
            }
        }
        IdealCode::new(basis)
    }

    /// Kernel of the coefficient-sum map, spanned by `Y^g - Y^0`.
    pub fn augmentation_ideal(&self) -> IdealCode {
        let mut basis = EchelonBasis::new(self.dimension());
        for g in 1..self.dimension() {
            basis.insert(&self.field, self.sub(&self.basis_element(g), &self.one()));
        }
        IdealCode::new(basis)
    }

    pub fn ideal_sum(&self, a: &IdealCode, b: &IdealCode) -> IdealCode {
        let mut basis = a.basis.clone();
        basis.extend_from(&self.field, &b.basis);
        IdealCode::new(basis)
    }

    /// `a` intersect `b`, as `(a^perp + b^perp)^perp` for the Euclidean form.
    pub fn ideal_intersection(&self, a: &IdealCode, b: &IdealCode) -> IdealCode {
        let perp = |c: &IdealCode| null_space_of_basis(&self.field, &c.basis, &c.basis());
        let sum = perp(a).stack(&perp(b)).expect("equal lengths");
        let sum_basis = EchelonBasis::from_matrix(&self.field, &sum);
        let meet = null_space_of_basis(&self.field, &sum_basis, &sum);
        IdealCode::new(EchelonBasis::from_matrix(&self.field, &meet))
    }

    /// Span of all products of basis vectors of `a` and `b`.
    pub fn ideal_product(&self, a: &IdealCode, b: &IdealCode) -> IdealCode {
        let mut basis = EchelonBasis::new(self.dimension());
        for x in a.basis.rows() {
            for y in b.basis.rows() {
                basis.insert(&self.field, self.multiply(x, y));
            }
        }
        IdealCode::new(basis)
    }

    /// `{x : x c = 0 for all c in a}`.
    pub fn annihilator(&self, a: &IdealCode) -> IdealCode {
        let n = self.dimension();
        // (x c)_h = sum_g x_g c_(h-g): one equation in x per (c, h).
        let mut eqs = EchelonBasis::new(n);
        for c in a.basis.rows() {
            for h in 0..n {
                let row: Vec<FieldElement> =
                    (0..n).map(|g| c[self.sum[h * n + self.neg[g]]]).collect();
                eqs.insert(&self.field, row);
            }
        }
        let ns = null_space_of_basis(&self.field, &eqs, &eqs.to_matrix());
        IdealCode::new(EchelonBasis::from_matrix(&self.field, &ns))
    }

    /// Every ideal of the algebra, sorted by dimension and then basis.
    ///
    /// Cyclic ideals are collected by sweeping all `|F|^|G|` vectors (a
    /// vector's scalar multiples and translates generate the same ideal and
    /// are skipped), then the set is closed under adding cyclic ideals.
    /// Every ideal is the sum of the cyclic ideals of its elements, so the
    /// fixed point holds all of them.
    pub fn enumerate_ideals(&self) -> Result<Vec<IdealCode>> {
        let n = self.dimension();
        let q = self.field.size();
        self.capacity.check(q, n)?;
        let total = vector_count(q, n).expect("checked by capacity") as usize;

        let mut visited = vec![false; total];
        let mut cyclic: Vec<(IdealCode, AlgebraElement)> = Vec::new();
        let mut seen: HashSet<IdealCode> = HashSet::new();
        let encode = |v: &[FieldElement]| v.iter().rev().fold(0usize, |acc, x| acc * q + x.index());
        let scalars: Vec<FieldElement> = self.field.elements().skip(1).collect();

        for idx in 1..total {
            if visited[idx] {
                continue;
            }
            let mut v = Vec::with_capacity(n);
            let mut rest = idx;
            for _ in 0..n {
                v.push(self.field.element(rest % q)?);
                rest /= q;
            }
            for g in 0..n {
                let shifted = self.shift(g, &v);
                for &c in &scalars {
                    visited[encode(&self.scale(c, &shifted))] = true;
                }
            }
            let ideal = self.ideal_generated_by(&v);
            if seen.insert(ideal.clone()) {
                cyclic.push((ideal, v));
            }
        }

        let mut all: HashSet<IdealCode> = seen;
        all.insert(self.zero_ideal());
        let mut frontier: Vec<IdealCode> = all.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for ideal in &frontier {
                for (c, generator) in &cyclic {
                    if ideal.contains(&self.field, generator) {
                        continue;
                    }
                    let sum = self.ideal_sum(ideal, c);
                    if !all.contains(&sum) {
                        all.insert(sum.clone());
                        next.push(sum);
                    }
                }
            }
            frontier = next;
        }

        let mut ideals: Vec<IdealCode> = all.into_iter().collect();
        ideals.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        for ideal in &ideals {
            if !self.is_ideal(&ideal.basis) {
                return Err(Error::consistency("enumerated subspace is not an ideal"));
            }
        }
        Ok(ideals)
    }

    fn require_semisimple(&self) -> Result<()> {
        if self.group.order().is_multiple_of(self.field.p()) {
            return Err(Error::domain(format!(
                "GF({})[{}] is not semisimple: the characteristic divides |G|",
                self.field.size(),
                self.group
            )));
        }
        Ok(())
    }

    /// Nonzero ideals containing no smaller nonzero ideal (semisimple
    /// algebras only).
    pub fn minimal_ideals(&self) -> Result<Vec<IdealCode>> {
        self.require_semisimple()?;
        let all = self.enumerate_ideals()?;
        Ok(minimal_among(&self.field, &all))
    }

    /// Euclidean dual `{v : sum c_g v_g = 0}` or Hermitian dual
    /// `{v : sum c_g v_g^(p^nu) = 0}` of an ideal.
    pub fn dual_code(&self, code: &IdealCode, variant: Variant, nu: u32) -> Result<IdealCode> {
        let basis = code.basis();
        let pairing_matrix = match variant {
            Variant::Euclidean => basis,
            Variant::Hermitian => {
                // sum c_g conj(v_g) = 0  iff  sum conj(c_g) v_g = 0
                self.field.frobenius_conjugate(FieldElement::ONE, nu)?;
                basis.map(|x| {
                    self.field
                        .frobenius_conjugate(x, nu)
                        .expect("degree checked")
                })
            }
        };
        let echelon = EchelonBasis::from_matrix(&self.field, &pairing_matrix);
        let ns = null_space_of_basis(&self.field, &echelon, &pairing_matrix);
        let dual = self.ideal_from(EchelonBasis::from_matrix(&self.field, &ns))?;
        debug_assert_eq!(dual.dimension() + code.dimension(), self.dimension());
        Ok(dual)
    }

    /// `C` meets its dual trivially.
    pub fn is_lcd(&self, code: &IdealCode, variant: Variant, nu: u32) -> Result<bool> {
        let dual = self.dual_code(code, variant, nu)?;
        Ok(self.ideal_sum(code, &dual).dimension() == self.dimension())
    }

    /// Whether some ideal in `all_ideals` is a complement of `code`.
    ///
    /// A complement `D` satisfies `C D = 0`, hence lies in the annihilator
    /// of `C`, and `1 = e + f` with `e` in `C`, `f` in `D` puts the
    /// annihilator inside `D`. So only `D = Ann(C)` needs to be tried.
    pub fn is_direct_summand(&self, code: &IdealCode, all_ideals: &[IdealCode]) -> bool {
        let n = self.dimension();
        let ann = self.annihilator(code);
        if code.dimension() + ann.dimension() != n {
            return false;
        }
        all_ideals
            .iter()
            .filter(|d| d.dimension() == ann.dimension())
            .any(|d| *d == ann && self.ideal_sum(code, d).dimension() == n)
    }

    /// Smallest `e` with `M^e = 0`, `M` the augmentation ideal, for
    /// `GF(p^nu)[Z_{p^k}]`.
    pub fn nilpotency_index(&self) -> Result<u32> {
        let p = self.field.p();
        let factors = self.group.factors();
        let is_cyclic_p_group = factors.len() == 1 && {
            let mut m = factors[0];
            while m.is_multiple_of(p) {
                m /= p;
            }
            m == 1
        };
        if !is_cyclic_p_group {
            return Err(Error::domain(format!(
                "nilpotency index needs a cyclic {p}-group, got {}",
                self.group
            )));
        }
        let maximal = self.augmentation_ideal();
        let mut power = maximal.clone();
        let mut e = 1;
        while !power.is_zero() {
            power = self.ideal_product(&power, &maximal);
            e += 1;
        }
        Ok(e)
    }
}

/// The minimal nonzero members of a list of ideals.
pub fn minimal_among(field: &FieldDescriptor, ideals: &[IdealCode]) -> Vec<IdealCode> {
    ideals
        .iter()
        .filter(|i| !i.is_zero())
        .filter(|i| {
            !ideals
                .iter()
                .any(|j| !j.is_zero() && j.dimension() < i.dimension() && j.is_subset_of(field, i))
        })
        .cloned()
        .collect()
}

/// Flags for one enumerated ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealEntry {
    pub dimension: usize,
    pub lcd: bool,
    pub summand: bool,
}

/// Oracle counts for one `(G, p, nu, variant)` next to the closed-form
/// count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub group: AbelianGroup,
    pub context: DualityContext,
    pub field_size: usize,
    pub ideal_total: usize,
    pub lcd_total: usize,
    pub summand_total: usize,
    pub formula_lcd: BigUint,
    pub agreement: bool,
    pub entries: Vec<IdealEntry>,
    /// The LCD ideals found, listed only when the counts disagree.
    pub witnesses: Vec<IdealCode>,
}

impl VerificationReport {
    pub fn summary_line(&self) -> String {
        format!(
            "summary\tgroup={}\tp={}\tnu={}\tvariant={}\tfield={}\tideal_total={}\tlcd_total={}\tsummand_total={}\tformula_lcd={}\tagreement={}",
            self.group,
            self.context.p(),
            self.context.nu(),
            self.context.variant(),
            self.field_size,
            self.ideal_total,
            self.lcd_total,
            self.summand_total,
            self.formula_lcd,
            self.agreement
        )
    }

    /// One line per ideal, then the summary line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(
                out,
                "ideal\tindex={i}\tdim={}\tlcd={}\tsummand={}",
                e.dimension, e.lcd, e.summand
            )
            .unwrap();
        }
        for w in &self.witnesses {
            writeln!(out, "witness\tdim={}\tbasis={:?}", w.dimension(), w.basis()).unwrap();
        }
        out.push_str(&self.summary_line());
        out.push('\n');
        out
    }
}

/// The algebra the oracle uses for `ctx`: `GF(p^nu)[G]` for Euclidean,
/// `GF(p^(2 nu))[G]` for Hermitian.
pub fn oracle_algebra(
    group: &AbelianGroup,
    ctx: DualityContext,
    capacity: Capacity,
) -> Result<GroupAlgebra> {
    let field = build_field(ctx.p(), ctx.field_degree())?;
    GroupAlgebra::new(group.clone(), field, capacity)
}

/// LCD and summand flags for each ideal in `ideals`.
pub fn ideal_entries(
    alg: &GroupAlgebra,
    ideals: &[IdealCode],
    ctx: DualityContext,
) -> Result<Vec<IdealEntry>> {
    ideals
        .iter()
        .map(|c| {
            Ok(IdealEntry {
                dimension: c.dimension(),
                lcd: alg.is_lcd(c, ctx.variant(), ctx.nu())?,
                summand: alg.is_direct_summand(c, ideals),
            })
        })
        .collect()
}

/// Counts LCD ideals of the oracle algebra by exhaustion and compares with
/// `2^(r_one + r_two)`.
pub fn verify_counts(
    group: &AbelianGroup,
    ctx: DualityContext,
    capacity: Capacity,
) -> Result<VerificationReport> {
    let alg = oracle_algebra(group, ctx, capacity)?;
    let ideals = alg.enumerate_ideals()?;
    let entries = ideal_entries(&alg, &ideals, ctx)?;
    let lcd_total = entries.iter().filter(|e| e.lcd).count();
    let summand_total = entries.iter().filter(|e| e.summand).count();
    let formula_lcd = count_lcd(group, ctx)?.lcd_count;
    let agreement = BigUint::from(lcd_total) == formula_lcd;
    let witnesses = if agreement {
        Vec::new()
    } else {
        ideals
            .iter()
            .zip(&entries)
            .filter(|(_, e)| e.lcd)
            .map(|(i, _)| i.clone())
            .collect()
    };
    Ok(VerificationReport {
        group: group.clone(),
        context: ctx,
        field_size: alg.field().size(),
        ideal_total: ideals.len(),
        lcd_total,
        summand_total,
        formula_lcd,
        agreement,
        entries,
        witnesses,
    })
}
