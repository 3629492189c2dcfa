use super::{poly_eq, scan, Witnesses};
use super::families::{gamma_tilde_poly, rix_free_poly, tally_over};
use crate::actions::{canonical_rep, foata_strehl, mfs_step, orbit, restricted_step, Action};
use crate::bijections::lyc;
use crate::error::Result;
use crate::perm::{admissible_inversion_count, classify, des, inv, par_fold, shape_counts, Permutation};
use crate::qpoly::{GammaExpansion, MPoly, Monomial, Var};
use crate::rixfact::{rix, rix_factorize};

type Step = fn(&Permutation, usize) -> Result<Permutation>;

/// `g_x ∘ g_x = id` for every `x`, and `g_x ∘ g_y = g_y ∘ g_x` for every pair.
fn involution_and_commutation(name: &str, step: Step, p: &Permutation, w: &mut Witnesses) -> Result<()> {
    let n = p.len();
    let images: Vec<Permutation> = (1..=n).map(|x| step(p, x)).collect::<Result<_>>()?;
    for x in 1..=n {
        let back = step(&images[x - 1], x)?;
        w.require(&back == p, || format!("{name}_{x} is not an involution at {p}: returns {back}"));
        for y in x + 1..=n {
            let xy = step(&images[y - 1], x)?;
            let yx = step(&images[x - 1], y)?;
            w.require(xy == yx, || format!("{name}_{x} and {name}_{y} do not commute at {p}: {xy} vs {yx}"));
        }
    }
    Ok(())
}

/// `|O|` elements whose des-distribution must be `t^d (1+t)^free`.
fn orbit_des_shape(o: &std::collections::BTreeSet<Permutation>, d: usize, free: usize) -> bool {
    let mut by_des = vec![0u64; free + 1];
    for q in o {
        match des(q).checked_sub(d) {
            Some(j) if j <= free => by_des[j] += 1,
            _ => return false,
        }
    }
    let mut binom = 1u64;
    for (j, &c) in by_des.iter().enumerate() {
        if c != binom {
            return false;
        }
        binom = binom * (free - j) as u64 / (j as u64 + 1);
    }
    true
}

pub(super) fn lemma_2_1(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        let checked = involution_and_commutation("phi", foata_strehl, p, w)
            .and_then(|()| involution_and_commutation("phi'", mfs_step, p, w));
        if let Err(e) = checked {
            w.push(format!("{p}: {e}"));
        }
        let ai = admissible_inversion_count(p);
        for x in 1..=n {
            let q = mfs_step(p, x).expect("label in range");
            let after = admissible_inversion_count(&q);
            w.require(after == ai, || format!("ai({p}) = {ai} but ai(phi'_{x}) = ai({q}) = {after}"));
        }
    })?;

    // orbit structure: each orbit holds exactly one dd-free permutation, has
    // 2^da elements and descent distribution t^des (1+t)^(n-1-2des)
    let covered = par_fold(
        n,
        || (0u64, Witnesses::new()),
        |(total, w), p| {
            let s = shape_counts(p);
            if s.dd != 0 {
                return;
            }
            let d = des(p);
            let o = orbit(p, Action::Mfs);
            *total += o.len() as u64;
            let others = o.iter().filter(|q| *q != p && shape_counts(q).dd == 0).count();
            w.require(others == 0, || format!("MFS orbit of {p} has {others} further dd-free elements"));
            w.require(o.len() == 1 << s.da, || format!("MFS orbit of {p} has {} elements, da = {}", o.len(), s.da));
            w.require(s.da + 2 * d + 1 == n, || format!("{p}: da = {} but n - 1 - 2 des = {}", s.da, n - 1 - 2 * d));
            w.require(orbit_des_shape(&o, d, s.da), || format!("MFS orbit of {p}: des is not distributed as t^{d}(1+t)^{}", s.da));
            let rep = canonical_rep(o.iter().next_back().expect("non-empty orbit"), Action::Mfs);
            w.require(rep.as_ref() == Ok(p), || format!("canonical representative of the orbit of {p} is {rep:?}"));
        },
        |(a, wa), (b, wb)| (a + b, wa.merge(wb)),
    )?;
    let (total, found) = covered;
    *w = std::mem::take(w).merge(found);
    let factorial: u64 = (1..=n as u64).product();
    w.require(total == factorial, || format!("n={n}: MFS orbits cover {total} permutations, expected {factorial}"));
    Ok(())
}

pub(super) fn lemma_2_2(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        let (ai, iv) = (admissible_inversion_count(p), inv(p));
        w.require(ai <= iv, || format!("{p}: ai = {ai} exceeds inv = {iv}"));
        if shape_counts(p).dd == 0 {
            w.require(ai == iv, || format!("{p} has no double descent but ai = {ai}, inv = {iv}"));
        }
    })
}

pub(super) fn lemma_4_1(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        if let Err(e) = involution_and_commutation("phi''", restricted_step, p, w) {
            w.push(format!("{p}: {e}"));
        }
        let f = rix_factorize(p).expect("n >= 1");
        let (ai, l) = (admissible_inversion_count(p), lyc(p));
        for x in 1..=n {
            let q = restricted_step(p, x).expect("label in range");
            let g = rix_factorize(&q).expect("n >= 1");
            w.require(g.beta1 == f.beta1, || format!("phi''_{x}: beta1 {} -> {} ({p} -> {q})", f.beta1, g.beta1));
            w.require(g.rix_set == f.rix_set, || format!("phi''_{x}: RIX {:?} -> {:?} ({p} -> {q})", f.rix_set, g.rix_set));
            let same_type = g.alphas.len() == f.alphas.len()
                && g.beta_kind == f.beta_kind
                && f.factors().zip(g.factors()).all(|(a, b)| {
                    let (mut a, mut b) = (a.to_vec(), b.to_vec());
                    a.sort_unstable();
                    b.sort_unstable();
                    a == b
                });
            w.require(same_type, || format!("phi''_{x} changes the factorization type: {f} -> {g}"));
            w.require(lyc(&q) == l, || format!("phi''_{x}: lyc changes ({p} -> {q})"));
            w.require(admissible_inversion_count(&q) == ai, || format!("phi''_{x}: ai changes ({p} -> {q})"));
        }
    })
}

pub(super) fn lemma_4_2(n: usize, w: &mut Witnesses) -> Result<()> {
    // gamma expansion over R(n) with st = ai and st = lyc at once
    let lhs = rix_free_poly(n)?;
    let r0 = tally_over(n, |p| {
        classify(p).rix_free_one_double_descent.map(|k| {
            Monomial::ONE
                .with(Var::Y, k)
                .with(Var::Q, admissible_inversion_count(p))
                .with(Var::Beta, lyc(p))
        })
    })?;
    let rhs = GammaExpansion::from_y_poly(n, &r0).reconstruct();
    poly_eq(w, format!("n={n}: sum over R(n) of b^lyc q^ai t^des vs R0(n,k) expansion"), &lhs, &rhs);
    poly_eq(
        w,
        format!("n={n}: same expansion without lyc"),
        &lhs.substitute(Var::Beta, 1),
        &rhs.substitute(Var::Beta, 1),
    );

    // R0 --f--> D~ preserves ai, and ai = inv on D~
    let ai_r0 = r0.substitute(Var::Beta, 1);
    let ai_tilde = tally_over(n, |p| {
        classify(p)
            .no_double_descent_final_ascent
            .map(|k| Monomial::ONE.with(Var::Y, k).with(Var::Q, admissible_inversion_count(p)))
    })?;
    let inv_tilde = if n == 0 { MPoly::zero() } else { gamma_tilde_poly(n)? };
    poly_eq(w, format!("n={n}: ai over R0(n,k) vs ai over D~(n,k)"), &ai_r0, &ai_tilde);
    poly_eq(w, format!("n={n}: ai over D~(n,k) vs inv over D~(n,k)"), &ai_tilde, &inv_tilde);

    // restricted orbits inside R(n)
    let (total, r_size, found) = par_fold(
        n,
        || (0u64, 0u64, Witnesses::new()),
        |(total, r_size, w), p| {
            if rix(p) != 0 {
                return;
            }
            *r_size += 1;
            match canonical_rep(p, Action::Restricted) {
                Ok(c) => w.require(classify(&c).rix_free_one_double_descent.is_some(), || {
                    format!("restricted representative {c} of {p} is not in R0")
                }),
                Err(e) => w.push(format!("{p}: {e}")),
            }
            let s = shape_counts(p);
            if s.dd != 1 {
                return;
            }
            let d = des(p);
            let o = orbit(p, Action::Restricted);
            *total += o.len() as u64;
            let escaped = o.iter().filter(|q| rix(q) != 0).count();
            w.require(escaped == 0, || format!("restricted orbit of {p} leaves R(n) {escaped} times"));
            let others = o.iter().filter(|q| *q != p && shape_counts(q).dd == 1).count();
            w.require(others == 0, || format!("restricted orbit of {p} has {others} further dd = 1 elements"));
            w.require(o.len() == 1 << s.da, || format!("restricted orbit of {p} has {} elements, da = {}", o.len(), s.da));
            w.require(s.da + 2 * d == n, || format!("{p}: da = {} but n - 2 des = {}", s.da, n - 2 * d));
            w.require(orbit_des_shape(&o, d, s.da), || format!("restricted orbit of {p}: des is not t^{d}(1+t)^{}", s.da));
        },
        |(a, b, wa), (c, d, wb)| (a + c, b + d, wa.merge(wb)),
    )?;
    *w = std::mem::take(w).merge(found);
    w.require(total == r_size, || format!("n={n}: restricted orbits cover {total} of |R(n)| = {r_size}"));
    Ok(())
}
