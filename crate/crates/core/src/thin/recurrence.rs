use std::collections::BTreeMap;

use rand::Rng;

use super::coeffs::ThinCoefficients;
use super::field::Field;
use super::ThinError;
use crate::periodic::{EdgeId, Family};

const G: Family = Family::RayedG;
const R: usize = 2;

/// Which rail of `RAYED_G` the skew cuts run along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chain {
    P,
    Q,
}

impl Chain {
    pub fn slot(self) -> usize {
        match self {
            Chain::P => 0,
            Chain::Q => 1,
        }
    }

    /// `c_i`, the chain edge of cell `i`.
    pub fn edge(self, i: usize) -> EdgeId {
        EdgeId::Cell { index: i, slot: self.slot() }
    }

    fn label(self) -> &'static str {
        match self {
            Chain::P => "a",
            Chain::Q => "b",
        }
    }
}

fn rung(i: usize) -> EdgeId {
    EdgeId::Cell { index: i, slot: R }
}

/// Functions on named points, indexed by edges of `RAYED_G`, with sparse
/// columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionFamily<F> {
    points: Vec<String>,
    columns: BTreeMap<EdgeId, Vec<(usize, F)>>,
}

impl<F: Field> FunctionFamily<F> {
    pub fn new(points: Vec<String>) -> Self {
        FunctionFamily {
            points,
            columns: BTreeMap::new(),
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn all_points(&self) -> Vec<usize> {
        (0..self.points.len()).collect()
    }

    pub fn set_column(&mut self, e: EdgeId, mut col: Vec<(usize, F)>) {
        col.retain(|(_, v)| !v.is_zero());
        col.sort_by_key(|&(a, _)| a);
        self.columns.insert(e, col);
    }

    pub fn column(&self, e: EdgeId) -> &[(usize, F)] {
        self.columns.get(&e).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn value(&self, e: EdgeId, a: usize) -> F {
        self.column(e).iter().find(|&&(b, _)| b == a).map(|(_, v)| v.clone()).unwrap_or_else(F::zero)
    }

    /// `Σ_e λ_e f_e(a)` over the edges with a stored column.
    pub fn apply(&self, lambda: &ThinCoefficients<F>, a: usize) -> F {
        self.columns
            .iter()
            .flat_map(|(&e, col)| col.iter().filter(move |&&(b, _)| b == a).map(move |(_, v)| (e, v)))
            .fold(F::zero(), |acc, (e, v)| acc.add(&lambda.value(e).mul(v)))
    }

    /// `Σ_e λ_e f_e` at every point where some term is nonzero.
    pub fn apply_all(&self, lambda: &ThinCoefficients<F>) -> BTreeMap<usize, F> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (&e, col) in &self.columns {
            let c = lambda.value(e);
            if c.is_zero() {
                continue;
            }
            for (a, v) in col {
                let slot = acc.entry(*a).or_insert_with(F::zero);
                *slot = slot.add(&c.mul(v));
            }
        }
        acc
    }

    /// Combination of columns, as a sparse vector.
    fn combine(&self, terms: &[(EdgeId, F)]) -> Vec<(usize, F)> {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (e, c) in terms {
            for (a, v) in self.column(*e) {
                let slot = acc.entry(*a).or_insert_with(F::zero);
                *slot = slot.add(&c.mul(v));
            }
        }
        acc.into_iter().collect()
    }
}

/// The points `*`, `a_0..=a_{k+1}`, `b_0..=b_{k+1}`.
fn standard_points(k: usize) -> Vec<String> {
    let mut out = vec!["*".to_string()];
    for side in ["a", "b"] {
        out.extend((0..=k + 1).map(|i| format!("{side}{i}")));
    }
    out
}

/// `λ⁰` on `{r_0, c_0}`, `λ^i` on `{c_{i−1}, r_i, c_i}`, and a function
/// family for which all of them are thin dependences.
#[derive(Debug, Clone)]
pub struct SkewFamily<F> {
    pub chain: Chain,
    pub lambda0: ThinCoefficients<F>,
    pub lambdas: Vec<ThinCoefficients<F>>,
    pub f: FunctionFamily<F>,
}

impl<F: Field> SkewFamily<F> {
    pub fn k(&self) -> usize {
        self.lambdas.len()
    }

    /// Build from the chain functions `f_{c_i}` (`i ≤ k`) and coefficients;
    /// each `f_{r_i}` is solved from its dependence.
    fn synthesize(
        chain: Chain,
        points: Vec<String>,
        chain_cols: Vec<Vec<(usize, F)>>,
        lambda0: [F; 2],
        lambdas: Vec<[F; 3]>,
    ) -> Result<Self, ThinError> {
        let mut f = FunctionFamily::new(points);
        for (i, col) in chain_cols.into_iter().enumerate() {
            f.set_column(chain.edge(i), col);
        }
        let [l_r0, l_c0] = lambda0;
        let c = l_c0.div(&l_r0)?.neg();
        let col = f.combine(&[(chain.edge(0), c)]);
        f.set_column(rung(0), col);
        for (i, [a, b, cc]) in lambdas.iter().enumerate() {
            let i = i + 1;
            let col = f.combine(&[(chain.edge(i - 1), a.div(b)?.neg()), (chain.edge(i), cc.div(b)?.neg())]);
            f.set_column(rung(i), col);
        }
        let lambda0 = ThinCoefficients::from_explicit(G, [(rung(0), l_r0), (chain.edge(0), l_c0)]);
        let lambdas = lambdas
            .into_iter()
            .enumerate()
            .map(|(i, [a, b, c])| {
                let i = i + 1;
                ThinCoefficients::from_explicit(G, [(chain.edge(i - 1), a), (rung(i), b), (chain.edge(i), c)])
            })
            .collect();
        Ok(SkewFamily {
            chain,
            lambda0,
            lambdas,
            f,
        })
    }

    /// `λ⁰ = (r_0: 1, c_0: −1)`, `λ^i = (c_{i−1}: 1, r_i: 1, c_i: −1)` with
    /// `f_{c_i} = χ_{x_{i+1}} − χ_{x_i}` along the chain side.
    pub fn canonical(k: usize, chain: Chain) -> Self {
        let points = standard_points(k);
        let idx = |i: usize| 1 + i + if chain == Chain::Q { k + 2 } else { 0 };
        let cols = (0..=k).map(|i| vec![(idx(i), F::from_i64(-1)), (idx(i + 1), F::one())]).collect();
        let one = F::one;
        let minus = || F::from_i64(-1);
        SkewFamily::synthesize(chain, points, cols, [one(), minus()], (1..=k).map(|_| [one(), one(), minus()]).collect())
            .expect("nonzero coefficients")
    }

    /// Random nonzero coefficients and chain functions `s_i χ_{x_i} +
    /// t_i χ_{x_{i+1}}`, drawn by `draw`.
    pub fn random<Rg: Rng>(k: usize, chain: Chain, rng: &mut Rg, draw: impl Fn(&mut Rg) -> F) -> Self {
        let points = standard_points(k);
        let idx = |i: usize| 1 + i + if chain == Chain::Q { k + 2 } else { 0 };
        let cols = (0..=k).map(|i| vec![(idx(i), draw(rng)), (idx(i + 1), draw(rng))]).collect();
        let lambda0 = [draw(rng), draw(rng)];
        let lambdas = (1..=k).map(|_| [draw(rng), draw(rng), draw(rng)]).collect();
        SkewFamily::synthesize(chain, points, cols, lambda0, lambdas).expect("nonzero coefficients")
    }
}

/// A nonzero rational `±a/b` with `1 ≤ a, b ≤ 9`.
pub fn small_rational<Rg: Rng>(rng: &mut Rg) -> super::Q {
    let a = rng.gen_range(1..=9i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let b = rng.gen_range(1..=9i64);
    super::Q::new(a.into(), b.into())
}

/// A nonzero element of `GF(3)`.
pub fn nonzero_gf3<Rg: Rng>(rng: &mut Rg) -> super::Gf3 {
    super::Gf3::from_i64(rng.gen_range(1..=2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence<F> {
    pub chain: Chain,
    pub nu: Vec<F>,
    pub mu: Vec<F>,
    /// `λ′_{r_i} = μ_i` for `i ≤ k`, zero elsewhere.
    pub lambda_prime: ThinCoefficients<F>,
}

fn coefficient<F: Field>(lambda: &ThinCoefficients<F>, e: EdgeId, which: &str) -> Result<F, ThinError> {
    let v = lambda.value(e);
    if v.is_zero() {
        return Err(ThinError::DivisionByZero(format!("{which} = {}", G.edge_name(e))));
    }
    Ok(v)
}

fn require_support<F: Field>(lambda: &ThinCoefficients<F>, expected: &[EdgeId], name: &str) -> Result<(), ThinError> {
    let s = lambda.support();
    let mut want = expected.to_vec();
    want.sort();
    match s.finite_edges() {
        Some(have) if have == want => Ok(()),
        _ => Err(ThinError::SupportShape(format!(
            "{name} must be supported exactly on {:?}",
            want.iter().map(|&e| G.edge_name(e)).collect::<Vec<_>>()
        ))),
    }
}

/// `ν_0 = 1`, `ν_i = −(λ^i_{c_i} / λ^i_{c_{i−1}}) ν_{i−1}` and
/// `μ_i = −(λ^i_{r_i} / λ^i_{c_i}) ν_i`, with `λ⁰` in place of `λ^0`.
pub fn mu_nu_recurrence<F: Field>(
    lambda0: &ThinCoefficients<F>,
    lambdas: &[ThinCoefficients<F>],
    chain: Chain,
) -> Result<Recurrence<F>, ThinError> {
    let c = |i| chain.edge(i);
    let r0 = coefficient(lambda0, rung(0), "λ⁰ at")?;
    let c0 = coefficient(lambda0, c(0), "λ⁰ at")?;
    require_support(lambda0, &[rung(0), c(0)], "λ⁰")?;
    let mut nu = vec![F::one()];
    let mut mu = vec![r0.div(&c0)?.neg()];
    for (k, lam) in lambdas.iter().enumerate() {
        let i = k + 1;
        let which = format!("λ^{i} at");
        let prev = coefficient(lam, c(i - 1), &which)?;
        let cur = coefficient(lam, c(i), &which)?;
        let r = coefficient(lam, rung(i), &which)?;
        require_support(lam, &[c(i - 1), rung(i), c(i)], &format!("λ^{i}"))?;
        let n = cur.div(&prev)?.neg().mul(&nu[i - 1]);
        mu.push(r.div(&cur)?.neg().mul(&n));
        nu.push(n);
    }
    let lambda_prime = ThinCoefficients::from_explicit(G, mu.iter().enumerate().map(|(i, m)| (rung(i), m.clone())));
    Ok(Recurrence {
        chain,
        nu,
        mu,
        lambda_prime,
    })
}

/// `ν_i f_{c_i}(a) = Σ_{j ≤ i} μ_j f_{r_j}(a)` for every `i ≤ k` and every
/// sampled point.
pub fn verify_telescoping<F: Field>(
    nu: &[F],
    mu: &[F],
    f: &FunctionFamily<F>,
    chain: Chain,
    k: usize,
    sample: &[usize],
) -> bool {
    if nu.len() <= k || mu.len() <= k {
        return false;
    }
    let mut sampled = vec![false; f.points().len()];
    for &a in sample {
        if let Some(x) = sampled.get_mut(a) {
            *x = true;
        }
    }
    // Both sides vanish outside the support of the running sum and of
    // `f_{c_i}`, so only those points need comparing.
    let mut running: BTreeMap<usize, F> = BTreeMap::new();
    for i in 0..=k {
        for (a, v) in f.column(rung(i)) {
            let slot = running.entry(*a).or_insert_with(F::zero);
            *slot = slot.add(&mu[i].mul(v));
        }
        running.retain(|_, v| !v.is_zero());
        let chain_col = f.column(chain.edge(i));
        let points = running.keys().copied().chain(chain_col.iter().map(|&(a, _)| a));
        for a in points {
            if !sampled[a] {
                continue;
            }
            let lhs = nu[i].mul(&f.value(chain.edge(i), a));
            if running.get(&a).cloned().unwrap_or_else(F::zero) != lhs {
                return false;
            }
        }
    }
    true
}

/// `Σ_{i ≤ k} μ_i f_{r_i}(a) = 0` at every sampled point where
/// `f_{c_k}` vanishes. Returns the number of points checked, or the first
/// failing point.
pub fn lambda_prime_zero_sum<F: Field>(
    rec: &Recurrence<F>,
    f: &FunctionFamily<F>,
    sample: &[usize],
) -> Result<usize, String> {
    let k = rec.mu.len() - 1;
    let sums = f.apply_all(&rec.lambda_prime);
    let mut checked = 0;
    for &a in sample {
        if !f.value(rec.chain.edge(k), a).is_zero() {
            continue;
        }
        if sums.get(&a).is_some_and(|v| !v.is_zero()) {
            return Err(f.points()[a].clone());
        }
        checked += 1;
    }
    Ok(checked)
}

/// Points `x_0..x_{k−1}` of the chain side, where the telescoped sum must
/// vanish.
pub fn chain_points<F: Field>(f: &FunctionFamily<F>, chain: Chain, k: usize) -> Vec<usize> {
    (0..k).filter_map(|i| f.point(&format!("{}{i}", chain.label()))).collect()
}
