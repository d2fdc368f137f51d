use super::ClassFunction;
use crate::error::{invalid, invariant, Result};
use crate::exact::{Cyclotomic, Poly};
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularVerdict {
    pub regular: bool,
    /// dim V(w, ζ).
    pub eigenspace_dim: usize,
    /// A vector of V(w, ζ) on no reflecting hyperplane.
    pub witness: Option<Vec<Cyclotomic>>,
}

/// Whether the ζ-eigenspace of element `w` (ζ = exp(2πi/d)) contains a
/// regular vector; if it does, the eigenvalues of w are checked to be ζ^{m_i*}.
///
/// Candidates are taken on the moment curve Σ_j t^j·b_j over a basis b of the
/// eigenspace. A hyperplane not containing the eigenspace meets this curve in
/// at most dim − 1 values of t, so t = 0, …, (dim − 1)·N* decides the question.
pub fn regular_element_check(
    g: &FiniteGroup,
    w: usize,
    d: u32,
    coexponents: &[u32],
) -> Result<RegularVerdict> {
    if d == 0 {
        return Err(invalid("d must be positive"));
    }
    let zeta = Cyclotomic::root_of_unity(d, 1);
    let m = g.matrix(w);
    let basis = m.eigenspace_basis(&zeta)?;
    let forms: Vec<Vec<Cyclotomic>> = g.hyperplanes().into_iter().map(|(f, _)| f).collect();
    let k = basis.len();
    let mut witness = None;
    if k > 0 {
        let tries = (k - 1) * forms.len() + 1;
        for t in 0..tries as i64 {
            let mut v = vec![Cyclotomic::zero(); g.dim()];
            let mut pow = Cyclotomic::one();
            for b in &basis {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi = &*vi + bi * &pow;
                }
                pow = pow * Cyclotomic::from_int(t);
            }
            let avoids = forms.iter().all(|f| {
                let dot = f
                    .iter()
                    .zip(&v)
                    .fold(Cyclotomic::zero(), |acc, (a, b)| acc + a * b);
                !dot.is_zero()
            });
            if avoids {
                witness = Some(v);
                break;
            }
        }
    }
    if witness.is_some() {
        if coexponents.len() != g.dim() {
            return Err(invalid("one coexponent per dimension required"));
        }
        let want = coexponents
            .iter()
            .fold(Poly::<Cyclotomic>::one(), |acc, &c| {
                let lam = Cyclotomic::root_of_unity(d, i64::from(c));
                acc.mul(&Poly::new(vec![Cyclotomic::one(), -lam]))
            });
        if want != m.det_one_minus_x()? {
            return Err(invariant(format!(
                "element {w} is regular for d = {d} but its eigenvalues are not ζ^{{m_i*}}"
            )));
        }
    }
    Ok(RegularVerdict {
        regular: witness.is_some(),
        eigenspace_dim: k,
        witness,
    })
}

#[derive(Clone, Debug)]
pub struct ExteriorPower {
    pub character: ClassFunction,
    pub irreducible: bool,
}

/// w ↦ e_i(eigenvalues of w), read from det(1 − xw) = Σ (−1)^i e_i x^i.
pub fn exterior_power_character(g: &FiniteGroup, i: usize) -> Result<ExteriorPower> {
    if i > g.dim() {
        return Err(invalid(format!(
            "exterior power {i} exceeds dimension {}",
            g.dim()
        )));
    }
    let sign = Cyclotomic::from_int(if i.is_multiple_of(2) { 1 } else { -1 });
    let info = g.class_info();
    let character = ClassFunction::from_fn(g, |c| info[c].det_one_minus_x.coeff(i) * &sign);
    let irreducible = character.is_irreducible(g);
    Ok(ExteriorPower {
        character,
        irreducible,
    })
}
