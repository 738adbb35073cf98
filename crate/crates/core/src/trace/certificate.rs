use std::fmt;

use num_traits::{One, Signed, Zero};

use super::equations::Equation;
use super::symbol::{Symbol, TraceExpr};
use crate::algebra::{GeneratorId, Rational};

/// Exact proof that `tau(g* g) = 0` for every tracial state.
///
/// `sum_e lambda_e E_e = combination`, where each `E_e = 0` is a trace
/// equation and `combination` is `tau(g* g)` plus a nonnegative combination
/// of other `tau(h* h)`, with no constant. Since each `tau(h* h) >= 0`, all of
/// them vanish; faithfulness then gives `g = 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct Certificate {
    pub target: GeneratorId,
    pub symbol: Symbol,
    /// `(equation index, lambda)` with nonzero lambda, ascending by index.
    pub multipliers: Vec<(usize, Rational)>,
    pub combination: TraceExpr,
}

impl Certificate {
    pub(crate) fn from_multipliers(
        target: GeneratorId,
        symbol: Symbol,
        multipliers: Vec<(usize, Rational)>,
        equations: &[Equation],
    ) -> Option<Certificate> {
        let combination = combine(&multipliers, equations)?;
        let t = combination.coeff(&symbol);
        if !t.is_positive() {
            return None;
        }
        let scale = t.recip();
        let multipliers = multipliers
            .into_iter()
            .filter(|(_, l)| !l.is_zero())
            .map(|(e, l)| (e, l * &scale))
            .collect();
        Some(Certificate {
            target,
            symbol,
            multipliers,
            combination: combination.scale(&scale),
        })
    }

    /// Rechecks the certificate against the equation set it was built from.
    pub fn verify(&self, equations: &[Equation]) -> bool {
        let Some(recomputed) = combine(&self.multipliers, equations) else {
            return false;
        };
        recomputed == self.combination
            && recomputed.constant.is_zero()
            && recomputed.coeff(&self.symbol).is_one()
            && self.symbol.is_square()
            && recomputed.terms.iter().all(|(s, c)| s.is_square() && c.is_positive())
    }
}

fn combine(multipliers: &[(usize, Rational)], equations: &[Equation]) -> Option<TraceExpr> {
    let mut out = TraceExpr::zero();
    for (e, l) in multipliers {
        out.add_scaled(&equations.get(*e)?.expr, l);
    }
    Some(out)
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} = 0 because", self.target)?;
        writeln!(f, "  {} = 0", self.combination)?;
        write!(f, "  is the combination of {} trace equations", self.multipliers.len())
    }
}
