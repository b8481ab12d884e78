//! The braided trace on the quotient algebra (the functional killing every
//! nontrivial isotypic component) and the quantum trace on End(U_k).

use crate::algebra::{AlgebraConfig, Letter, Mode, NFPoly, Word};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::qscalar::QScalar;
use crate::uq_modules::{Generator, SpinModule};

fn word_weight(w: &[Letter]) -> i64 {
    w.iter().map(|&l| 2 - 2 * l as i64).sum()
}

/// Invariant projection on the degree `<= d` part of the quotient algebra.
///
/// The complement is `span{X·b, Y·b, H·b}`. Since every normal word is a
/// weight vector, `H·b` already spans all nonzero weights, and the
/// weight-zero part of the complement is spanned by `X·b` for `b` of
/// weight -2 and `Y·b` for `b` of weight 2. The trace is the functional on
/// weight zero that kills those images and sends 1 to 1.
#[derive(Clone, Debug)]
pub struct InvariantProjector {
    cfg: AlgebraConfig,
    d: usize,
    basis: Vec<Word>,
    zero_weight: Vec<Word>,
    complement_zero: Vec<Vector>,
    functional: Vector,
}

impl InvariantProjector {
    pub fn new(cfg: &AlgebraConfig, d: usize) -> Result<Self> {
        if cfg.mode() != Mode::Quotient {
            return Err(Error::InvalidParameter("the braided trace lives on the quotient algebra".into()));
        }
        let basis = cfg.normal_words_upto(d);
        let zero_weight: Vec<Word> = basis.iter().filter(|w| word_weight(w) == 0).cloned().collect();
        let mut complement_zero = Vec::new();
        for b in &basis {
            let g = match word_weight(b) {
                -2 => Generator::X,
                2 => Generator::Y,
                _ => continue,
            };
            let img = cfg.uq_act(g, &NFPoly::word(b.clone()));
            complement_zero.push(cfg.coordinates(&img, &zero_weight)?);
        }
        let functional = if complement_zero.is_empty() {
            vec![QScalar::one()]
        } else {
            let m = Matrix::from_columns(zero_weight.len(), &complement_zero);
            let left_null = m.transpose().nullspace();
            if left_null.len() != 1 {
                return Err(Error::RankDeficient);
            }
            let f = &left_null[0];
            let one_pos = zero_weight.iter().position(Vec::is_empty).expect("empty word is normal");
            let norm = f[one_pos].inv().map_err(|_| Error::RankDeficient)?;
            f.iter().map(|x| x * &norm).collect()
        };
        Ok(Self { cfg: cfg.clone(), d, basis, zero_weight, complement_zero, functional })
    }

    pub fn degree_bound(&self) -> usize {
        self.d
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn config(&self) -> &AlgebraConfig {
        &self.cfg
    }

    /// Rank of the complement plus the span of 1; equals the dimension of
    /// the filtered piece exactly when the decomposition is unique.
    pub fn total_rank(&self) -> usize {
        let nonzero = self.basis.len() - self.zero_weight.len();
        let mut cols = self.complement_zero.clone();
        let mut one = vec![QScalar::zero(); self.zero_weight.len()];
        one[self.zero_weight.iter().position(Vec::is_empty).expect("normal")] = QScalar::one();
        cols.push(one);
        nonzero + Matrix::from_columns(self.zero_weight.len(), &cols).rank()
    }

    pub fn is_complete(&self) -> bool {
        self.total_rank() == self.basis.len()
    }

    /// The coefficient of 1 in the decomposition `x = λ·1 + r`.
    pub fn trace(&self, x: &NFPoly) -> Result<QScalar> {
        let reduced = self.cfg.reduce(x);
        if reduced.degree().unwrap_or(0) > self.d {
            return Err(Error::InvalidParameter(format!("degree exceeds the bound {}", self.d)));
        }
        let coords = self.cfg.coordinates(&reduced, &self.basis)?;
        let mut acc = QScalar::zero();
        for (w, c) in self.basis.iter().zip(coords) {
            if let Some(i) = self.zero_weight.iter().position(|z| z == w) {
                acc += &(&c * &self.functional[i]);
            }
        }
        Ok(acc)
    }

    /// `P_inv(x) = tr(x)·1`.
    pub fn project(&self, x: &NFPoly) -> Result<NFPoly> {
        Ok(NFPoly::constant(self.trace(x)?))
    }
}

/// Braided trace of `x` in the quotient with `h = 0`, normalised by
/// `tr 1 = 1`.
pub fn braided_trace(x: &NFPoly, c: &QScalar, q: &QScalar, d: usize) -> Result<QScalar> {
    let cfg = AlgebraConfig::new(q, &QScalar::zero(), c, Mode::Quotient)?;
    InvariantProjector::new(&cfg, d)?.trace(x)
}

pub fn v_power(m: usize) -> NFPoly {
    NFPoly::word(vec![1; m])
}

/// `(q^2-1) / (2(q^{2m+2}-1)) · (1+(-1)^m) · q^{q_sign·m} · c^{c_sign·m/2}`,
/// computed for symbolic `q` and then evaluated at `q0` when given.
/// `q_sign = c_sign = -1` is the formula as printed; odd `m` gives 0.
pub fn trace_formula_vm(m: usize, c: &QScalar, q_sign: i64, c_sign: i64, q0: Option<&QScalar>) -> Result<QScalar> {
    if m % 2 == 1 {
        return Ok(QScalar::zero());
    }
    let q = QScalar::q();
    let m_i = m as i64;
    let lead = (&q.pow(2) - &QScalar::one()).checked_div(&(&q.pow(2 * m_i + 2) - &QScalar::one()))?;
    let c_part = if c_sign >= 0 { c.pow(m_i / 2) } else { c.inv()?.pow(m_i / 2) };
    let value = &(&lead * &q.pow(q_sign * m_i)) * &c_part;
    match q0 {
        None => Ok(value),
        Some(q0) => value.compose(q0),
    }
}

/// Outcome of comparing the projection oracle with the closed formula.
#[derive(Clone, Debug)]
pub struct FormulaComparison {
    pub m: usize,
    pub oracle: QScalar,
    /// `((q_sign, c_sign), matches)` for the four sign choices.
    pub candidates: Vec<((i64, i64), bool)>,
    /// `k` with `oracle = q^k · formula(+, +)`, if the ratio is a monomial.
    pub q_power_offset: Option<i64>,
}

impl FormulaComparison {
    pub fn matching(&self) -> Vec<(i64, i64)> {
        self.candidates.iter().filter(|(_, ok)| *ok).map(|(s, _)| *s).collect()
    }

    pub fn printed_matches(&self) -> bool {
        self.candidates.iter().any(|(s, ok)| *s == (-1, -1) && *ok)
    }
}

/// Compare `tr(v^m)` from the projection against every sign convention of
/// the closed formula, for symbolic `q`.
pub fn compare_trace_formula(m: usize, c: &QScalar) -> Result<FormulaComparison> {
    let oracle = braided_trace(&v_power(m), c, &QScalar::q(), m)?;
    let mut candidates = Vec::new();
    for q_sign in [1, -1] {
        for c_sign in [1, -1] {
            let f = trace_formula_vm(m, c, q_sign, c_sign, None)?;
            candidates.push(((q_sign, c_sign), f == oracle));
        }
    }
    let base = trace_formula_vm(m, c, 1, 1, None)?;
    let q_power_offset = if base.is_zero() || oracle.is_zero() {
        None
    } else {
        let ratio = &oracle / &base;
        let k = ratio.shift();
        (ratio == QScalar::q().pow(k)).then_some(k)
    };
    Ok(FormulaComparison { m, oracle, candidates, q_power_offset })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TraceConvention {
    /// `Tr(M q^H)`.
    QH,
    /// `Tr(M q^-H)`.
    QNegH,
}

impl TraceConvention {
    pub const ALL: [TraceConvention; 2] = [TraceConvention::QH, TraceConvention::QNegH];

    pub fn label(&self) -> &'static str {
        match self {
            TraceConvention::QH => "q^H",
            TraceConvention::QNegH => "q^-H",
        }
    }
}

pub fn quantum_trace_end(module: &SpinModule, m: &Matrix, conv: TraceConvention) -> QScalar {
    let k = match conv {
        TraceConvention::QH => module.q_h(),
        TraceConvention::QNegH => module.q_neg_h(),
    };
    m.mul(k).trace()
}

/// Whether `Tr_q(ρ_End(a) M) = 0` for every generator and elementary `M`.
pub fn convention_is_invariant(module: &SpinModule, conv: TraceConvention) -> Result<bool> {
    for m in module.elementary_basis() {
        for g in Generator::ALL {
            if !quantum_trace_end(module, &module.endo_action(g, &m)?, conv).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The unique convention whose trace is invariant on End(U) for spin `l/2`.
pub fn select_convention(l: usize) -> Result<TraceConvention> {
    let module = SpinModule::new(l);
    let passing: Vec<TraceConvention> = TraceConvention::ALL
        .into_iter()
        .filter(|&c| convention_is_invariant(&module, c).unwrap_or(false))
        .collect();
    match passing.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Unsolved(format!("no invariant trace convention for l = {l}"))),
        _ => Err(Error::Unsolved(format!("both conventions invariant for l = {l}"))),
    }
}
