//! Linear independence of squared linear forms and their k-fold products.
//!
//! A system in normal form is `S1 = {z1^2, ..., zr^2, f1^2, ..., fm^2}`
//! with `fi = sum_j a_ij z_j`. Independence of `S1` reduces to a rank
//! condition on the pair matrix (the C(r,2) x m matrix of products
//! `a_ij * a_ik` over pairs j < k); when the rank drops, a kernel vector of
//! the pair matrix extends to an explicit dependency witness. A generic
//! coefficient-matrix decider serves as the brute-force oracle for all of
//! it, including the k-product sets.

use itertools::Itertools;
use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{LinalgError, RationalMatrix};
use crate::poly::{PolyError, Polynomial, VarSet};
use crate::rat::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("system must have r >= 1 (got {0})")]
    RankCountZero(usize),
    #[error("form {index} has {got} coefficients, expected {expected}")]
    FormLength {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("pair matrix requires r >= 2 (got r = {0})")]
    NeedsTwoCoordinates(usize),
    #[error("operation requires m >= 1")]
    NoForms,
    #[error("classifier requires m in {{1, 2}} (got m = {0})")]
    CoRankOutOfRange(usize),
    #[error("k = {k} out of range 1..={l}")]
    KOutOfRange { k: usize, l: usize },
    #[error("empty polynomial list")]
    EmptyList,
    #[error("input forms are all zero")]
    AllFormsZero,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Normal-form data: `r` coordinate squares plus `m` extra squared forms,
/// each given by its coefficient row over `z1..zr`. Zero rows and repeated
/// rows are legal (degenerate instances flow through every decision path).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearFormSystem {
    r: usize,
    forms: Vec<Vec<Rational>>,
}

impl LinearFormSystem {
    pub fn new(r: usize, forms: Vec<Vec<Rational>>) -> Result<Self, IndependenceError> {
        if r == 0 {
            return Err(IndependenceError::RankCountZero(r));
        }
        for (index, f) in forms.iter().enumerate() {
            if f.len() != r {
                return Err(IndependenceError::FormLength {
                    index,
                    got: f.len(),
                    expected: r,
                });
            }
        }
        Ok(LinearFormSystem { r, forms })
    }

    pub fn from_i64(r: usize, forms: &[&[i64]]) -> Result<Self, IndependenceError> {
        Self::new(
            r,
            forms
                .iter()
                .map(|f| f.iter().map(|&x| crate::rat::int(x)).collect())
                .collect(),
        )
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.forms.len()
    }

    pub fn form(&self, i: usize) -> &[Rational] {
        &self.forms[i]
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.forms[i][j]
    }

    /// The variable ring `z1..zr` and the polynomials of `S1`:
    /// `z1^2, ..., zr^2, f1^2, ..., fm^2` in that order.
    pub fn materialize(&self) -> (VarSet, Vec<Polynomial>) {
        let names: Vec<String> = (1..=self.r).map(|j| format!("z{j}")).collect();
        let vars = VarSet::new(names).expect("generated names are distinct");
        let zs: Vec<Polynomial> = (1..=self.r)
            .map(|j| Polynomial::variable(&vars, &format!("z{j}")).expect("in ring"))
            .collect();
        let mut polys: Vec<Polynomial> = zs.iter().map(|z| z.pow(2)).collect();
        for f in &self.forms {
            let mut lin = Polynomial::zero(&vars);
            for (j, c) in f.iter().enumerate() {
                lin = lin + zs[j].scale(c);
            }
            polys.push(lin.pow(2));
        }
        (vars, polys)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Independent,
    Dependent,
}

/// Outcome of an independence decision; `witness` is present exactly when
/// the verdict is `Dependent` and is a nonzero combination vector that
/// annihilates the polynomial set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub verdict: Verdict,
    pub rank: usize,
    pub witness: Option<Vec<Rational>>,
}

impl IndependenceReport {
    pub fn is_independent(&self) -> bool {
        self.verdict == Verdict::Independent
    }
}

/// Structural classification for m <= 2 systems: `CondA`/`CondB` are the
/// two dependence shapes available when m = 2 (a proportional pair in S1,
/// or both extra forms supported on a common coordinate pair `{M, N}`,
/// 1-based). `RankDefect` marks dependence outside those shapes (m = 1
/// only; for m = 2 it would contradict the classification theorem).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cor22Classification {
    Independent,
    CondA,
    CondB { m: usize, n: usize },
    RankDefect,
}

impl Cor22Classification {
    pub fn is_independent(&self) -> bool {
        matches!(self, Cor22Classification::Independent)
    }
}

/// Row index pairs (j, k), j < k, in the fixed order
/// (1,2),(1,3),...,(1,r),(2,3),...,(r-1,r).
pub fn coordinate_pairs(r: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(r * (r.saturating_sub(1)) / 2);
    for j in 0..r {
        for k in j + 1..r {
            pairs.push((j, k));
        }
    }
    pairs
}

/// The C(r,2) x m matrix with entry `a_ij * a_ik` at row (j,k), column i.
pub fn pair_matrix(sys: &LinearFormSystem) -> Result<RationalMatrix, IndependenceError> {
    if sys.r() < 2 {
        return Err(IndependenceError::NeedsTwoCoordinates(sys.r()));
    }
    if sys.m() == 0 {
        return Err(IndependenceError::NoForms);
    }
    let pairs = coordinate_pairs(sys.r());
    let mut data = Vec::with_capacity(pairs.len() * sys.m());
    for &(j, k) in &pairs {
        for i in 0..sys.m() {
            data.push(sys.coeff(i, j) * sys.coeff(i, k));
        }
    }
    Ok(RationalMatrix::new(pairs.len(), sys.m(), data)?)
}

/// Rank criterion for `S1`: independent iff the pair matrix has rank m.
///
/// When dependent, the witness `(lambda_1..lambda_r, mu_1..mu_m)` comes
/// from a kernel vector `mu` of the pair matrix, with `lambda_j` chosen to
/// cancel the surviving diagonal: `lambda_j = -sum_i mu_i a_ij^2`.
pub fn s1_independent(sys: &LinearFormSystem) -> Result<IndependenceReport, IndependenceError> {
    let pm = pair_matrix(sys)?;
    let rank = pm.rank();
    if rank == sys.m() {
        return Ok(IndependenceReport {
            verdict: Verdict::Independent,
            rank,
            witness: None,
        });
    }
    let kernel = pm.kernel();
    let mu = kernel
        .first()
        .expect("rank < m guarantees a kernel vector")
        .clone();
    let mut witness = Vec::with_capacity(sys.r() + sys.m());
    for j in 0..sys.r() {
        let mut lambda = Rational::zero();
        for (i, mu_i) in mu.iter().enumerate() {
            lambda -= mu_i * &(sys.coeff(i, j) * sys.coeff(i, j));
        }
        witness.push(lambda);
    }
    witness.extend(mu);
    Ok(IndependenceReport {
        verdict: Verdict::Dependent,
        rank,
        witness: Some(witness),
    })
}

fn support(row: &[Rational]) -> Vec<usize> {
    row.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, _)| j)
        .collect()
}

/// True when u and v are linearly dependent as vectors (including when
/// either is zero).
fn rows_proportional(u: &[Rational], v: &[Rational]) -> bool {
    for j in 0..u.len() {
        for k in j + 1..u.len() {
            if !(&u[j] * &v[k] - &u[k] * &v[j]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Structural classifier for m in {1, 2}; the emitted case always agrees
/// with the rank criterion.
pub fn cor22_classify(sys: &LinearFormSystem) -> Result<Cor22Classification, IndependenceError> {
    if sys.r() < 2 {
        return Err(IndependenceError::NeedsTwoCoordinates(sys.r()));
    }
    if !(1..=2).contains(&sys.m()) {
        return Err(IndependenceError::CoRankOutOfRange(sys.m()));
    }
    let report = s1_independent(sys)?;
    if report.is_independent() {
        return Ok(Cor22Classification::Independent);
    }
    if sys.m() == 1 {
        // condA/condB are reserved for m = 2
        return Ok(Cor22Classification::RankDefect);
    }
    // condA: some two elements of S1 are proportional. Distinct coordinate
    // squares never are, so the candidates are fi^2 vs zj^2 (fi supported
    // on at most one coordinate, including the zero form) and f1^2 vs f2^2
    // (proportional coefficient rows).
    let cond_a = sys.forms().iter().any(|f| support(f).len() <= 1)
        || rows_proportional(sys.form(0), sys.form(1));
    if cond_a {
        return Ok(Cor22Classification::CondA);
    }
    // condB: both forms supported inside a common coordinate pair {M, N}.
    let mut union = support(sys.form(0));
    for j in support(sys.form(1)) {
        if !union.contains(&j) {
            union.push(j);
        }
    }
    union.sort_unstable();
    if union.len() == 2 {
        return Ok(Cor22Classification::CondB {
            m: union[0] + 1,
            n: union[1] + 1,
        });
    }
    Ok(Cor22Classification::RankDefect)
}

/// All C(l, k) products of k distinct list elements, one per index subset,
/// in lexicographic subset order. Distinct subsets may produce equal
/// polynomials; duplicates are retained.
pub fn k_products(polys: &[Polynomial], k: usize) -> Result<Vec<Polynomial>, IndependenceError> {
    let l = polys.len();
    if k == 0 || k > l {
        return Err(IndependenceError::KOutOfRange { k, l });
    }
    let mut out = Vec::new();
    for subset in (0..l).combinations(k) {
        let mut acc = polys[subset[0]].clone();
        for &i in &subset[1..] {
            acc = acc.try_mul(&polys[i])?;
        }
        out.push(acc);
    }
    Ok(out)
}

/// Brute-force decider: build the coefficient matrix over the union of
/// occurring monomials and compare its rank with the list length. This is
/// the oracle every other independence operation is checked against.
pub fn generic_independent(
    polys: &[Polynomial],
) -> Result<IndependenceReport, IndependenceError> {
    if polys.is_empty() {
        return Err(IndependenceError::EmptyList);
    }
    let vars = polys[0].vars().clone();
    for p in polys {
        if *p.vars() != vars {
            return Err(IndependenceError::Poly(PolyError::VarSetMismatch));
        }
    }
    let mut monomials: Vec<_> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monomials.sort();
    monomials.dedup();
    if monomials.is_empty() {
        // every polynomial is zero; the first alone is a dependency
        let mut witness = vec![Rational::zero(); polys.len()];
        witness[0] = Rational::from_integer(1.into());
        return Ok(IndependenceReport {
            verdict: Verdict::Dependent,
            rank: 0,
            witness: Some(witness),
        });
    }
    let mut data = Vec::with_capacity(monomials.len() * polys.len());
    for m in &monomials {
        for p in polys {
            data.push(p.coeff(m));
        }
    }
    let matrix = RationalMatrix::new(monomials.len(), polys.len(), data)?;
    let rank = matrix.rank();
    if rank == polys.len() {
        Ok(IndependenceReport {
            verdict: Verdict::Independent,
            rank,
            witness: None,
        })
    } else {
        let kernel = matrix.kernel();
        let witness = kernel
            .first()
            .expect("rank < n guarantees a kernel vector")
            .clone();
        Ok(IndependenceReport {
            verdict: Verdict::Dependent,
            rank,
            witness: Some(witness),
        })
    }
}

/// Materializes `S1`, forms the k-products, and defers to the generic
/// decider.
pub fn sk_independent(
    sys: &LinearFormSystem,
    k: usize,
) -> Result<IndependenceReport, IndependenceError> {
    let l = sys.r() + sys.m();
    if k == 0 || k > l {
        return Err(IndependenceError::KOutOfRange { k, l });
    }
    let (_, polys) = sys.materialize();
    let products = k_products(&polys, k)?;
    generic_independent(&products)
}

/// True when `witness` is nonzero and its combination of `polys` expands
/// to the zero polynomial.
pub fn validate_witness(polys: &[Polynomial], witness: &[Rational]) -> bool {
    if polys.len() != witness.len() || witness.iter().all(Zero::is_zero) || polys.is_empty() {
        return false;
    }
    let mut acc = Polynomial::zero(polys[0].vars());
    for (p, w) in polys.iter().zip(witness) {
        let Ok(sum) = acc.try_add(&p.scale(w)) else {
            return false;
        };
        acc = sum;
    }
    acc.is_zero()
}

/// A raw form list reduced to normal form, together with the coordinate
/// change that realizes it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub system: LinearFormSystem,
    /// Indices of the rows selected as the new coordinate basis
    /// (lexicographically first maximal independent subset).
    pub basis_rows: Vec<usize>,
    /// Invertible n x n matrix T with `forms * T` in normal form:
    /// substituting `z = T w` sends basis row p_j to `w_j` and every other
    /// row to its normal-form expression `sum_j a_ij w_j`.
    pub change_of_basis: RationalMatrix,
}

/// Reduces an l x n matrix of linear forms (rows) to normal form: picks
/// the lexicographically first maximal independent row subset as the new
/// coordinate basis and expresses the remaining rows in it.
pub fn normalize(forms: &RationalMatrix) -> Result<Normalized, IndependenceError> {
    let n = forms.cols();
    // greedy rank-increasing scan, tracking an echelon copy of the basis
    let mut echelon: Vec<Vec<Rational>> = Vec::new();
    let mut basis_rows = Vec::new();
    for i in 0..forms.rows() {
        let mut row = forms.row(i).to_vec();
        reduce_against(&mut row, &echelon);
        if row.iter().any(|x| !x.is_zero()) {
            echelon.push(row);
            basis_rows.push(i);
        }
    }
    let r = basis_rows.len();
    if r == 0 {
        return Err(IndependenceError::AllFormsZero);
    }
    // complete the basis rows to an invertible n x n matrix with unit rows
    let mut completed: Vec<Vec<Rational>> = basis_rows
        .iter()
        .map(|&i| forms.row(i).to_vec())
        .collect();
    let mut ech = echelon.clone();
    for j in 0..n {
        let mut unit = vec![Rational::zero(); n];
        unit[j] = Rational::from_integer(1.into());
        let mut probe = unit.clone();
        reduce_against(&mut probe, &ech);
        if probe.iter().any(|x| !x.is_zero()) {
            ech.push(probe);
            completed.push(unit);
        }
    }
    let extension = RationalMatrix::from_rows(completed)?;
    let change_of_basis = extension.inverse()?;
    // express the non-basis rows in the new coordinates
    let mut a_rows = Vec::with_capacity(forms.rows() - r);
    for i in 0..forms.rows() {
        if basis_rows.contains(&i) {
            continue;
        }
        let image = transform_row(forms.row(i), &change_of_basis);
        debug_assert!(
            image[r..].iter().all(Zero::is_zero),
            "non-basis row must lie in the basis span"
        );
        a_rows.push(image[..r].to_vec());
    }
    Ok(Normalized {
        system: LinearFormSystem::new(r, a_rows)?,
        basis_rows,
        change_of_basis,
    })
}

/// Row vector times matrix.
fn transform_row(row: &[Rational], m: &RationalMatrix) -> Vec<Rational> {
    (0..m.cols())
        .map(|c| {
            let mut acc = Rational::zero();
            for (k, x) in row.iter().enumerate() {
                acc += x * m.get(k, c);
            }
            acc
        })
        .collect()
}

/// Gaussian reduction of `row` against echelon rows (each with some
/// leading nonzero entry).
fn reduce_against(row: &mut [Rational], echelon: &[Vec<Rational>]) {
    for e in echelon {
        let Some(lead) = e.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if row[lead].is_zero() {
            continue;
        }
        let factor = &row[lead] / &e[lead];
        for (x, y) in row.iter_mut().zip(e) {
            *x = &*x - &(&factor * y);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};

    fn running_example() -> LinearFormSystem {
        LinearFormSystem::from_i64(3, &[&[1, 1, 1], &[1, 2, 3], &[5, 8, 10]]).unwrap()
    }

    #[test]
    fn pair_matrix_of_the_running_example() {
        let pm = pair_matrix(&running_example()).unwrap();
        let expect =
            RationalMatrix::from_i64(&[&[1, 2, 40], &[1, 3, 50], &[1, 6, 80]]).unwrap();
        assert_eq!(pm, expect);
    }

    #[test]
    fn pair_matrix_r2_single_form() {
        let sys = LinearFormSystem::from_i64(2, &[&[1, 1]]).unwrap();
        let pm = pair_matrix(&sys).unwrap();
        assert_eq!(pm, RationalMatrix::from_i64(&[&[1]]).unwrap());
    }

    #[test]
    fn pair_matrix_zero_row_gives_zero_column() {
        let sys = LinearFormSystem::from_i64(3, &[&[0, 0, 0], &[1, 1, 1]]).unwrap();
        let pm = pair_matrix(&sys).unwrap();
        for row in 0..pm.rows() {
            assert_eq!(*pm.get(row, 0), int(0));
            assert_eq!(*pm.get(row, 1), int(1));
        }
    }

    #[test]
    fn pair_matrix_requires_two_coordinates() {
        let sys = LinearFormSystem::from_i64(1, &[&[1]]).unwrap();
        assert!(matches!(
            pair_matrix(&sys),
            Err(IndependenceError::NeedsTwoCoordinates(1))
        ));
    }

    #[test]
    fn witness_for_the_running_example() {
        let sys = running_example();
        let report = s1_independent(&sys).unwrap();
        assert_eq!(report.verdict, Verdict::Dependent);
        assert_eq!(report.rank, 2);
        let witness = report.witness.unwrap();
        assert_eq!(
            witness,
            vec![int(-5), int(4), int(-10), int(20), int(10), int(-1)]
        );
        let (_, polys) = sys.materialize();
        assert!(validate_witness(&polys, &witness));
    }

    #[test]
    fn r2_one_form_full_support_is_independent() {
        let sys = LinearFormSystem::from_i64(2, &[&[1, 1]]).unwrap();
        let report = s1_independent(&sys).unwrap();
        assert_eq!(report.verdict, Verdict::Independent);
    }

    #[test]
    fn r2_one_form_partial_support_is_dependent() {
        let sys = LinearFormSystem::from_i64(2, &[&[1, 0]]).unwrap();
        let report = s1_independent(&sys).unwrap();
        assert_eq!(report.verdict, Verdict::Dependent);
        let witness = report.witness.unwrap();
        let (_, polys) = sys.materialize();
        assert!(validate_witness(&polys, &witness));
    }

    #[test]
    fn classifier_examples() {
        // both extra forms supported on {z1, z2}
        let sys = LinearFormSystem::from_i64(3, &[&[1, 1, 0], &[1, -1, 0]]).unwrap();
        assert_eq!(
            cor22_classify(&sys).unwrap(),
            Cor22Classification::CondB { m: 1, n: 2 }
        );
        assert_eq!(s1_independent(&sys).unwrap().verdict, Verdict::Dependent);

        // f1 proportional to z1
        let sys = LinearFormSystem::from_i64(3, &[&[2, 0, 0], &[1, 1, 1]]).unwrap();
        assert_eq!(cor22_classify(&sys).unwrap(), Cor22Classification::CondA);

        // generic independent pair
        let sys = LinearFormSystem::from_i64(3, &[&[1, 1, 1], &[1, 2, 3]]).unwrap();
        assert_eq!(
            cor22_classify(&sys).unwrap(),
            Cor22Classification::Independent
        );

        // m = 1 dependence shows up as a bare rank defect
        let sys = LinearFormSystem::from_i64(3, &[&[1, 0, 0]]).unwrap();
        assert_eq!(
            cor22_classify(&sys).unwrap(),
            Cor22Classification::RankDefect
        );

        let sys =
            LinearFormSystem::from_i64(3, &[&[1, 1, 1], &[1, 2, 3], &[5, 8, 10]]).unwrap();
        assert!(matches!(
            cor22_classify(&sys),
            Err(IndependenceError::CoRankOutOfRange(3))
        ));
    }

    #[test]
    fn k_products_counts_and_collisions() {
        let (vars, polys) = {
            let sys = running_example();
            sys.materialize()
        };
        assert_eq!(polys.len(), 6);
        let s3 = k_products(&polys, 3).unwrap();
        assert_eq!(s3.len(), 20);
        let s1 = k_products(&polys, 1).unwrap();
        assert_eq!(s1, polys);
        assert!(matches!(
            k_products(&polys, 7),
            Err(IndependenceError::KOutOfRange { k: 7, l: 6 })
        ));

        // S2 of {z1^2, z1 z2, z1 z3, z2 z3} repeats a quartic
        let z = |n: &str| Polynomial::variable(&vars, n).unwrap();
        let list = vec![
            z("z1").pow(2),
            z("z1") * z("z2"),
            z("z1") * z("z3"),
            z("z2") * z("z3"),
        ];
        let s2 = k_products(&list, 2).unwrap();
        let dup = s2
            .iter()
            .tuple_combinations()
            .filter(|(p, q)| p == q)
            .count();
        assert_eq!(dup, 1);
        assert_eq!(
            generic_independent(&s2).unwrap().verdict,
            Verdict::Dependent
        );
        assert_eq!(
            generic_independent(&list).unwrap().verdict,
            Verdict::Independent
        );
    }

    #[test]
    fn generic_decider_on_degree_one_examples() {
        let vars = VarSet::new(vec!["z1", "z2"]).unwrap();
        let z1 = Polynomial::variable(&vars, "z1").unwrap();
        let z2 = Polynomial::variable(&vars, "z2").unwrap();
        let list = vec![z1.clone(), z2.clone(), &z1 + &z2];
        let report = generic_independent(&list).unwrap();
        assert_eq!(report.verdict, Verdict::Dependent);
        let witness = report.witness.clone().unwrap();
        assert!(validate_witness(&list, &witness));
        // the canonical witness of z1 + z2 - (z1 + z2)
        assert_eq!(witness, vec![int(1), int(1), int(-1)]);

        // squares of the same list are independent at k = 2
        let s2 = k_products(&list, 2).unwrap();
        assert_eq!(
            generic_independent(&s2).unwrap().verdict,
            Verdict::Independent
        );
    }

    #[test]
    fn generic_decider_all_zero_list() {
        let vars = VarSet::new(vec!["z1"]).unwrap();
        let zero = Polynomial::zero(&vars);
        let report = generic_independent(&[zero.clone(), zero]).unwrap();
        assert_eq!(report.verdict, Verdict::Dependent);
        assert_eq!(report.rank, 0);
        assert_eq!(report.witness.unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn sk_on_theorem_shapes() {
        // r = 2, m = 1, full support: S2 independent
        let sys = LinearFormSystem::from_i64(2, &[&[1, 1]]).unwrap();
        assert_eq!(
            sk_independent(&sys, 2).unwrap().verdict,
            Verdict::Independent
        );

        // r = 2, m = 2: six quartics in a five-dimensional space
        let sys = LinearFormSystem::from_i64(2, &[&[1, 1], &[2, -3]]).unwrap();
        let report = sk_independent(&sys, 2).unwrap();
        assert_eq!(report.verdict, Verdict::Dependent);
        assert_eq!(report.rank, 5);

        // the running example at k = 3: 20 products, rank below 20
        let report = sk_independent(&running_example(), 3).unwrap();
        assert_eq!(report.verdict, Verdict::Dependent);
        assert!(report.rank < 20);
    }

    #[test]
    fn normalize_the_dependent_triple() {
        let forms = RationalMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let norm = normalize(&forms).unwrap();
        assert_eq!(norm.system.r(), 2);
        assert_eq!(norm.system.m(), 1);
        assert_eq!(norm.system.form(0), &[int(1), int(1)]);
        assert_eq!(norm.basis_rows, vec![0, 1]);
        assert_eq!(norm.change_of_basis, RationalMatrix::identity(2));
    }

    #[test]
    fn normalize_identity_like_input() {
        let forms = RationalMatrix::identity(3);
        let norm = normalize(&forms).unwrap();
        assert_eq!(norm.system.r(), 3);
        assert_eq!(norm.system.m(), 0);
        assert_eq!(norm.change_of_basis, RationalMatrix::identity(3));
    }

    #[test]
    fn normalize_expresses_trailing_row_in_new_basis() {
        let forms = RationalMatrix::from_i64(&[&[1, 1], &[1, -1], &[1, 0]]).unwrap();
        let norm = normalize(&forms).unwrap();
        assert_eq!(norm.basis_rows, vec![0, 1]);
        assert_eq!(norm.system.m(), 1);
        assert_eq!(norm.system.form(0), &[frac(1, 2), frac(1, 2)]);
        // forms * T sends basis rows to unit rows and the rest to (A | 0)
        let image = forms.matmul(&norm.change_of_basis).unwrap();
        assert_eq!(image.row(0), RationalMatrix::identity(2).row(0));
        assert_eq!(image.row(1), RationalMatrix::identity(2).row(1));
        assert_eq!(image.row(2), &[frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn normalize_rejects_all_zero_input() {
        let forms = RationalMatrix::from_i64(&[&[0, 0], &[0, 0]]).unwrap();
        assert!(matches!(
            normalize(&forms),
            Err(IndependenceError::AllFormsZero)
        ));
    }

    #[test]
    fn normalize_passes_zero_rows_through_as_degenerate_forms() {
        let forms = RationalMatrix::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]).unwrap();
        let norm = normalize(&forms).unwrap();
        assert_eq!(norm.basis_rows, vec![1, 2]);
        assert_eq!(norm.system.m(), 1);
        assert_eq!(norm.system.form(0), &[int(0), int(0)]);
    }
}
