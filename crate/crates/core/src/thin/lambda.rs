use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::coeffs::{PeriodicValue, ThinCoefficients};
use super::family::ThinFamily;
use super::field::Field;
use super::ThinError;
use crate::periodic::{EdgeId, EpSet, Family, Vertex};

const G: Family = Family::RayedG;
const P: usize = 0;
const QS: usize = 1;
const R: usize = 2;
const LOOP: EdgeId = EdgeId::Prefix(0);

fn e(slot: usize, index: usize) -> EdgeId {
    EdgeId::Cell { index, slot }
}

/// Tails `p_i`, `q_i` for `i ≥ n` carrying `-v` and `v`, which cancel at
/// every tail vertex under the forward orientation.
fn tails<F: Field>(n: usize, v: &F) -> Vec<PeriodicValue<F>> {
    vec![
        PeriodicValue {
            slot: P,
            residue: 0,
            onset: n,
            value: v.neg(),
        },
        PeriodicValue {
            slot: QS,
            residue: 0,
            onset: n,
            value: v.clone(),
        },
    ]
}

/// `λ_{r_n} = 1`, `λ_{p_i} = −1` and `λ_{q_i} = 1` for `i ≥ n`, and
/// `λ_l = −n`.
///
/// With `n = 0` the rung `r_0` contributes nothing at `*`, so `λ_l = 0` and
/// the support is the double ray alone.
pub fn build_lambda_f_oneray<F: Field>(n: usize) -> ThinCoefficients<F> {
    let mut explicit = BTreeMap::new();
    explicit.insert(e(R, n), F::one());
    if n > 0 {
        explicit.insert(LOOP, F::from_i64(-(n as i64)));
    }
    ThinCoefficients::new(G, explicit, 1, tails(n, &F::one())).expect("valid classes")
}

/// Support of [`build_lambda_f_oneray`]: `{l} ∪ {r_n} ∪ {p_i, q_i : i ≥ n}`
/// for `n ≥ 1`, and the double ray without `l` for `n = 0`.
pub fn oneray_target(n: usize) -> EpSet {
    let ray = EpSet::slots_from(G, n, &["p", "q"]).expect("builtin slots").with_edge(e(R, n));
    if n == 0 {
        ray
    } else {
        ray.with_edge(LOOP)
    }
}

fn check_threerung(l: usize, m: usize, n: usize) -> Result<(), ThinError> {
    if l < m && m < n {
        Ok(())
    } else {
        Err(ThinError::BadParameters(format!("need l < m < n, got ({l}, {m}, {n})")))
    }
}

/// The finite cycle through rungs `r_l`, `r_m` joined with the double ray
/// from `r_n`: `λ_{r_l} = −n`, `λ_{r_m} = n` with `λ_{p_i} = n`,
/// `λ_{q_i} = −n` for `l ≤ i < m`, and `λ_{r_n} = −(m − l)` with its tails.
///
/// At `*` this gives `−ln + mn − n(m − l) = 0`.
pub fn build_lambda_f_threerung<F: Field>(l: usize, m: usize, n: usize) -> Result<ThinCoefficients<F>, ThinError> {
    check_threerung(l, m, n)?;
    let x = F::from_i64(-(n as i64));
    let y = F::from_i64(-((m - l) as i64));
    let mut explicit = BTreeMap::new();
    explicit.insert(e(R, l), x.clone());
    explicit.insert(e(R, m), x.neg());
    for i in l..m {
        explicit.insert(e(P, i), x.neg());
        explicit.insert(e(QS, i), x.clone());
    }
    explicit.insert(e(R, n), y.clone());
    ThinCoefficients::new(G, explicit, 1, tails(n, &y))
}

pub fn threerung_target(l: usize, m: usize, n: usize) -> Result<EpSet, ThinError> {
    check_threerung(l, m, n)?;
    let mut s = EpSet::slots_from(G, n, &["p", "q"])?.with_edge(e(R, n));
    for x in [e(R, l), e(R, m)] {
        s = s.with_edge(x);
    }
    for i in l..m {
        s = s.with_edge(e(P, i)).with_edge(e(QS, i));
    }
    Ok(s)
}

/// The square `{r_i, p_i, q_i, r_{i+1}}`.
pub fn square(i: usize) -> Vec<EdgeId> {
    vec![e(R, i), e(P, i), e(QS, i), e(R, i + 1)]
}

/// Two edge-disjoint squares at `i` and `j ≥ i + 2`.
pub fn two_squares_target(i: usize, j: usize) -> Result<EpSet, ThinError> {
    if j < i + 2 {
        return Err(ThinError::BadParameters(format!("squares at {i} and {j} share an edge")));
    }
    Ok(EpSet::finite(G, square(i).into_iter().chain(square(j)))?)
}

/// The loop together with the square at `i`.
pub fn loop_square_target(i: usize) -> EpSet {
    EpSet::finite(G, square(i).into_iter().chain([LOOP])).expect("finite")
}

/// The theta graph on rungs `r_i`, `r_j`, `r_k` and the rails between them.
pub fn theta_target(i: usize, j: usize, k: usize) -> Result<EpSet, ThinError> {
    if !(i < j && j < k) {
        return Err(ThinError::BadParameters(format!("need i < j < k, got ({i}, {j}, {k})")));
    }
    let rails = (i..k).flat_map(|c| [e(P, c), e(QS, c)]);
    Ok(EpSet::finite(G, rails.chain([e(R, i), e(R, j), e(R, k)]))?)
}

/// Reduced row echelon form; returns the pivot column of each row.
fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in &mut rows[r][col..ncols] {
            *x = x.mul(&inv);
        }
        let pivot = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, y) in row[col..ncols].iter_mut().zip(&pivot[col..ncols]) {
                    *x = x.sub(&factor.mul(y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}`.
fn kernel<F: Field>(mut rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); ncols];
            v[fc] = F::one();
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = row[fc].neg();
            }
            v
        })
        .collect()
}

/// A thin dependence of `f` whose support is exactly `target`, with a
/// constant value on every periodic class of `target`.
///
/// Unknowns are the exceptional edges and the periodic classes; equations
/// are the vertex sums up to two periods past the onset. A combination of
/// the kernel basis with every coordinate nonzero is searched for with a
/// fixed seed.
pub fn solve_thin_dependence<F: Field>(f: &ThinFamily, target: &EpSet) -> Result<ThinCoefficients<F>, ThinError> {
    let fam = f.family();
    if target.family() != fam {
        return Err(ThinError::FamilyMismatch(target.family().name(), fam.name()));
    }
    let t = target.normalized();
    let (onset, period) = (t.onset(), t.period());
    let exceptional: Vec<EdgeId> = t.exceptional().iter().copied().collect();
    let classes: Vec<(usize, usize)> = t.pattern().iter().copied().collect();
    if f.is_twisted() && classes.iter().any(|&(s, _)| s == R) {
        return Err(ThinError::NoDependence("infinitely many rungs meet the twist vertex".into()));
    }
    let n_unknowns = exceptional.len() + classes.len();
    let unknown_of = |x: EdgeId| -> Option<usize> {
        if let Some(k) = exceptional.iter().position(|&y| y == x) {
            return Some(k);
        }
        match x {
            EdgeId::Cell { index, slot } if index >= onset => classes
                .iter()
                .position(|&c| c == (slot, index % period))
                .map(|k| exceptional.len() + k),
            _ => None,
        }
    };
    let hi = onset + 2 * period;
    let mut rows = Vec::new();
    let vertices = (0..fam.n_prefix_vertices())
        .map(Vertex::Prefix)
        .chain((fam.first_cell()..=hi).flat_map(|index| (0..fam.width()).map(move |label| Vertex::Cell { index, label })));
    for v in vertices {
        let mut row = vec![F::zero(); n_unknowns];
        let mut any = false;
        let mut edges = fam.incident(v);
        if f.is_twisted() && v == Vertex::Prefix(0) {
            edges.extend((fam.first_cell()..onset).map(|index| e(R, index)));
        }
        edges.sort();
        edges.dedup();
        for x in edges {
            let c = f.value(x, v);
            if let (Some(k), true) = (unknown_of(x), c != 0) {
                row[k] = row[k].add(&F::from_i64(c));
                any = true;
            }
        }
        if any {
            rows.push(row);
        }
    }
    let basis = kernel(rows, n_unknowns);
    for k in 0..n_unknowns {
        if basis.iter().all(|b| b[k].is_zero()) {
            let name = if k < exceptional.len() {
                fam.edge_name(exceptional[k])
            } else {
                let (s, r) = classes[k - exceptional.len()];
                format!("class {} ≡ {r} mod {period}", fam.slot(s).name)
            };
            return Err(ThinError::NoDependence(format!("{name} vanishes in every dependence")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..256 {
        let coeffs: Vec<F> = basis.iter().map(|_| F::from_i64(rng.gen_range(1..=97))).collect();
        let x: Vec<F> = (0..n_unknowns)
            .map(|k| basis.iter().zip(&coeffs).fold(F::zero(), |acc, (b, c)| acc.add(&b[k].mul(c))))
            .collect();
        if x.iter().all(|v| !v.is_zero()) {
            let explicit = exceptional.iter().copied().zip(x.iter().cloned()).collect();
            let periodic = classes
                .iter()
                .zip(&x[exceptional.len()..])
                .map(|(&(slot, residue), v)| PeriodicValue {
                    slot,
                    residue,
                    onset,
                    value: v.clone(),
                })
                .collect();
            return ThinCoefficients::new(fam, explicit, period, periodic);
        }
    }
    Err(ThinError::NoDependence("no combination with full support found".into()))
}
