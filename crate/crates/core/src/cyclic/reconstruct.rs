use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{Field, Ring, RootField, UniPoly};
use crate::error::{Error, Result};

use super::{CyclicNormalForm, DihedralInvariants};

/// Outcome of inverting the dihedral invariants.
#[derive(Clone, PartialEq, Debug)]
pub enum Reconstruction<F> {
    Form(CyclicNormalForm<F>),
    /// No root lies in the coefficient field; the polynomial satisfied by
    /// `a_delta` is returned instead.
    Irrational {
        polynomial: UniPoly<F>,
    },
}

impl<F> Reconstruction<F> {
    pub fn form(self) -> Option<CyclicNormalForm<F>> {
        match self {
            Reconstruction::Form(f) => Some(f),
            Reconstruction::Irrational { .. } => None,
        }
    }
}

fn two<F: Ring>() -> F {
    F::from_int(2)
}

/// `2^t x^(2t) - 2^t u_1 x^t + u_delta^t`, vanishing at `a_delta`.
fn extension_polynomial<F: Field>(u: &[F], t: u32) -> UniPoly<F> {
    let t = t as usize;
    let p = two::<F>().pow(t as u32);
    let mut c = vec![F::zero(); 2 * t + 1];
    c[0] = u[t - 2].pow(t as u32);
    c[t] = -(p.clone() * &u[0]);
    c[2 * t] = p;
    UniPoly::new(c)
}

// roots of z^2 - u1 z + (u_delta / 2)^t, in canonical order
fn z_roots<F: RootField>(u: &[F], t: u32) -> Result<Vec<F>> {
    let u1 = &u[0];
    let half_ud = u[u.len() - 1].div(&two())?;
    let disc = u1.clone() * u1 - F::from_int(4) * &half_ud.pow(t);
    let mut zs: Vec<F> = Vec::new();
    for s in disc.nth_roots(2) {
        let z = (u1.clone() + &s).div(&two())?;
        if !zs.contains(&z) {
            zs.push(z);
        }
    }
    zs.sort_by(|a, b| a.canonical_cmp(b));
    Ok(zs)
}

// the (a_1, a_delta) pairs above one root z = a_delta^t
fn end_pairs<F: RootField>(u: &[F], t: u32, z: &F) -> Result<Vec<(F, F)>> {
    let ud = &u[u.len() - 1];
    let mut out = Vec::new();
    let mut bs = z.nth_roots(t);
    bs.sort_by(|a, b| a.canonical_cmp(b));
    for b in bs {
        if b.is_zero() {
            // then u_delta = 2 a_1 a_delta = 0 and a_1^t = u_1
            let mut as_ = u[0].nth_roots(t);
            as_.sort_by(|a, b| a.canonical_cmp(b));
            out.extend(as_.into_iter().map(|a| (a, b.clone())));
        } else {
            let a = ud.div(&(two::<F>() * &b))?;
            out.push((a, b));
        }
    }
    Ok(out)
}

// solve the paired linear systems for a_2 .. a_(delta-1)
fn fill_middle<F: Field>(u: &[F], t: u32, a1: &F, ad: &F) -> Result<Vec<F>> {
    let t = t as usize;
    let delta = t - 1;
    let mut a = vec![F::zero(); delta + 1];
    a[1] = a1.clone();
    a[delta] = ad.clone();
    let ui = |i: usize| &u[i - 1];
    for i in 2..delta {
        let j = t - i;
        if j < i {
            break;
        }
        let (ei, ej) = (i as u32, j as u32);
        if i == j {
            // (a_1^i + a_delta^i) a_i = u_i
            let c = a1.pow(ei) + &ad.pow(ei);
            if c.is_zero() {
                if !ui(i).is_zero() {
                    return Err(Error::SingularSystem { index: i });
                }
            } else {
                a[i] = ui(i).div(&c)?;
            }
            continue;
        }
        // [a_1^j  a_delta^j] [a_i]   [u_i]
        // [a_delta^i  a_1^i] [a_j] = [u_j]
        let (p, q) = (a1.pow(ej), ad.pow(ej));
        let (r, s) = (ad.pow(ei), a1.pow(ei));
        let det = p.clone() * &s - q.clone() * &r;
        if !det.is_zero() {
            a[i] = (ui(i).clone() * &s - q.clone() * ui(j)).div(&det)?;
            a[j] = (p.clone() * ui(j) - r.clone() * ui(i)).div(&det)?;
            continue;
        }
        // a_1^t = a_delta^t: take a_j = w^i a_i with w = a_delta / a_1
        if a1.is_zero() {
            return Err(Error::SingularSystem { index: i });
        }
        let w = ad.div(a1)?;
        let ai = ui(i).div(&(two::<F>() * &p))?;
        let aj = w.pow(ei) * &ai;
        if r.clone() * &ai + &(s.clone() * &aj) != *ui(j) {
            return Err(Error::SingularSystem { index: i });
        }
        a[i] = ai;
        a[j] = aj;
    }
    a.remove(0);
    Ok(a)
}

fn check_input<F: Field>(u: &DihedralInvariants<F>) -> Result<u32> {
    let t = super::orbit_count(u.case, u.n, u.genus)?;
    if u.u.len() + 1 != t as usize {
        return Err(Error::Constraint {
            constraint: alloc::format!("{} invariants for t = {t}", u.u.len()),
        });
    }
    if u.is_zero() {
        return Err(Error::ZeroDihedralInvariants);
    }
    Ok(t)
}

/// A normal form with the given dihedral invariants.
///
/// Among the admissible `a_delta^t` the first root in canonical order is
/// used, then the first `t`-th root of it. When a paired system for
/// `(a_i, a_(t-i))` is singular the solution with `a_(t-i) = w^i a_i`,
/// `w = a_delta / a_1`, is returned if it is consistent.
pub fn reconstruct_from_u<F: RootField>(u: &DihedralInvariants<F>) -> Result<Reconstruction<F>> {
    let t = check_input(u)?;
    if t == 1 {
        return Ok(Reconstruction::Form(CyclicNormalForm::new(
            u.case,
            u.n,
            u.genus,
            Vec::new(),
        )?));
    }
    let mut last_err = None;
    for z in z_roots(&u.u, t)? {
        for (a1, ad) in end_pairs(&u.u, t, &z)? {
            match fill_middle(&u.u, t, &a1, &ad) {
                Ok(a) => {
                    let nf = CyclicNormalForm::new(u.case, u.n, u.genus, a)?;
                    if nf.dihedral_invariants() == *u {
                        return Ok(Reconstruction::Form(nf));
                    }
                }
                Err(e) => last_err = Some(e),
            }
        }
    }
    match last_err {
        Some(e) => Err(e),
        None => Ok(Reconstruction::Irrational {
            polynomial: extension_polynomial(&u.u, t),
        }),
    }
}

/// Every normal form over `F` with the given invariants that the
/// construction reaches: both roots `a_delta^t`, every `t`-th root.
pub fn reconstruct_all<F: RootField>(
    u: &DihedralInvariants<F>,
) -> Result<Vec<CyclicNormalForm<F>>> {
    let t = check_input(u)?;
    let mut out: Vec<CyclicNormalForm<F>> = Vec::new();
    if t == 1 {
        out.push(CyclicNormalForm::new(u.case, u.n, u.genus, Vec::new())?);
        return Ok(out);
    }
    for z in z_roots(&u.u, t)? {
        for (a1, ad) in end_pairs(&u.u, t, &z)? {
            let Ok(a) = fill_middle(&u.u, t, &a1, &ad) else {
                continue;
            };
            let nf = CyclicNormalForm::new(u.case, u.n, u.genus, a)?;
            if nf.dihedral_invariants() == *u && !out.contains(&nf) {
                out.push(nf);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rational};
    use crate::cyclic::NormalFormCase;

    fn q(n: i64) -> Rational {
        rat(n, 1)
    }

    #[test]
    fn symmetric_family_at_one() {
        let u = DihedralInvariants::new(
            NormalFormCase::Even,
            2,
            5,
            vec![q(2), q(-66), q(-4), q(-66), q(2)],
        )
        .unwrap();
        let nf = reconstruct_from_u(&u).unwrap().form().unwrap();
        assert_eq!(nf.coeffs(), &[q(-1), q(-33), q(2), q(-33), q(-1)]);
        assert_eq!(nf.dihedral_invariants(), u);
    }

    #[test]
    fn zero_tuple_is_rejected() {
        let u = DihedralInvariants::new(NormalFormCase::Even, 2, 3, vec![q(0); 3]).unwrap();
        assert_eq!(reconstruct_from_u(&u), Err(Error::ZeroDihedralInvariants));
    }

    #[test]
    fn irrational_end_coefficient() {
        // t = 3: z^2 - z + 1/8 has no rational root
        let u = DihedralInvariants::new(NormalFormCase::Even, 2, 2, vec![q(1), q(1)]).unwrap();
        match reconstruct_from_u(&u).unwrap() {
            Reconstruction::Irrational { polynomial } => {
                assert_eq!(polynomial, UniPoly::from_ints(&[1, 0, 0, -8, 0, 0, 8]));
            }
            other => panic!("expected irrational, got {other:?}"),
        }
    }

    #[test]
    fn round_trip_generic() {
        let nf = CyclicNormalForm::new(NormalFormCase::Even, 2, 4, vec![q(3), q(-1), q(4), q(2)])
            .unwrap();
        let u = nf.dihedral_invariants();
        let back = reconstruct_from_u(&u).unwrap().form().unwrap();
        assert_eq!(back.dihedral_invariants(), u);
    }
}
