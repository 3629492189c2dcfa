use std::collections::{BTreeMap, BTreeSet};

use super::families::tally_over;
use super::{poly_eq, scan, Witnesses};
use crate::bijections::{f_inv, f_map, phi, phi_inv};
use crate::error::Result;
use crate::perm::{classify, des, enumerate, exc, fix_set, maj, shape_counts, statistics, Permutation};
use crate::qpoly::{Monomial, Var};
use crate::rixfact::{is_valid_factorization, rix, rix_factorize, HookKind, RixFactorization};

pub(super) fn prop_3_2(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        let f = rix_factorize(p).expect("n >= 1");
        w.require(is_valid_factorization(p, &f), || format!("{p}: invalid factorization {f}"));
        let r = rix(p);
        w.require(r == f.rix_set.len(), || format!("{p}: rix = {r} but RIX = {:?}", f.rix_set));
        w.require((r == 0) == (f.beta_kind == HookKind::F), || format!("{p}: rix = {r} with {:?}-hook beta", f.beta_kind));
        if r == 0 {
            let pos = p.position_of(f.beta1).expect("beta1 is a letter");
            let dd = crate::perm::letter_shape(p, pos) == crate::perm::Shape::DoubleDescent;
            w.require(dd, || format!("{p}: beta1 = {} is not a double descent although rix = 0", f.beta1));
        }
    })
}

fn is_increasing(w: &[usize]) -> bool {
    w.windows(2).all(|p| p[0] < p[1])
}

/// Every way of cutting `p` into `α₁⋯αᵢβ` with L-hooks `αⱼ` of length ≥ 2,
/// a hook `β`, decreasing tops ending above `β₁`, and `β₁` the greatest
/// descent top of `β` unless `β` is increasing.
fn admissible_factorizations(p: &Permutation) -> Vec<Vec<Vec<usize>>> {
    let n = p.len();
    let mut out = Vec::new();
    for cuts in 0u32..(1 << (n - 1)) {
        let mut parts: Vec<Vec<usize>> = vec![vec![p[0]]];
        for i in 1..n {
            if cuts & (1 << (i - 1)) != 0 {
                parts.push(Vec::new());
            }
            parts.last_mut().expect("non-empty").push(p[i]);
        }
        let (beta, alphas) = parts.split_last().expect("at least one part");
        let alphas_ok = alphas.iter().all(|a| a.len() >= 2 && HookKind::of(a) == Some(HookKind::L));
        let mut tops: Vec<usize> = alphas.iter().map(|a| *a.last().expect("non-empty")).collect();
        tops.push(beta[0]);
        let chain_ok = tops.windows(2).all(|t| t[0] > t[1]);
        let beta_top_ok = is_increasing(beta)
            || (0..beta.len() - 1).filter(|&i| beta[i] > beta[i + 1]).map(|i| beta[i]).max() == Some(beta[0]);
        if alphas_ok && chain_ok && HookKind::of(beta).is_some() && beta_top_ok {
            out.push(parts);
        }
    }
    out
}

fn as_parts(f: &RixFactorization) -> Vec<Vec<usize>> {
    f.factors().map(<[usize]>::to_vec).collect()
}

pub(super) fn prop_3_4(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        let found = admissible_factorizations(p);
        let expected = as_parts(&rix_factorize(p).expect("n >= 1"));
        w.require(found == [expected], || format!("{p}: admissible factorizations {found:?}"));
    })
}

pub(super) fn prop_3_5(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        let image = phi(p);
        w.require(des(p) == exc(&image), || format!("des({p}) != exc(Phi = {image})"));
        let rixed = rix_factorize(p).expect("n >= 1").rix_set;
        w.require(rixed == fix_set(&image), || format!("RIX({p}) = {rixed:?} but FIX({image}) = {:?}", fix_set(&image)));
        let back = phi_inv(&image);
        w.require(&back == p, || format!("Phi^-1(Phi({p})) = {back}"));
        let pre = phi_inv(p);
        let again = phi(&pre);
        w.require(&again == p, || format!("Phi(Phi^-1({p})) = {again}"));
        if let Some(k) = classify(p).rix_free_one_double_descent {
            let m = classify(&image).derangement_no_cda;
            w.require(m == Some(k), || format!("{p} in R0(n,{k}) but Phi({p}) = {image} has E-index {m:?}"));
        }
    })?;
    let r0 = tally_over(n, |p| classify(p).rix_free_one_double_descent.map(|k| Monomial::ONE.with(Var::Y, k)))?;
    let e = tally_over(n, |p| classify(p).derangement_no_cda.map(|k| Monomial::ONE.with(Var::Y, k)))?;
    poly_eq(w, format!("n={n}: |R0(n,k)| vs |E(n,k)|"), &r0, &e);
    Ok(())
}

pub(super) fn f_bijection(n: usize, w: &mut Witnesses) -> Result<()> {
    scan(n, w, |p, w| {
        let m = classify(p);
        if let Some(k) = m.rix_free_one_double_descent {
            let beta1 = rix_factorize(p).expect("n >= 1").beta1;
            match f_map(p) {
                Ok(q) => {
                    let mk = classify(&q).no_double_descent_final_ascent;
                    w.require(mk == Some(k), || format!("f({p}) = {q} has D~-index {mk:?}, expected {k}"));
                    w.require(q.last() == Some(beta1), || format!("f({p}) = {q} does not end with beta1 = {beta1}"));
                    let back = f_inv(&q);
                    w.require(back.as_ref() == Ok(p), || format!("f^-1(f({p})) = {back:?}"));
                }
                Err(e) => w.push(format!("f({p}): {e}")),
            }
        }
        if let Some(k) = m.no_double_descent_final_ascent {
            match f_inv(p) {
                Ok(q) => {
                    let mk = classify(&q).rix_free_one_double_descent;
                    w.require(mk == Some(k), || format!("f^-1({p}) = {q} has R0-index {mk:?}, expected {k}"));
                    let again = f_map(&q);
                    w.require(again.as_ref() == Ok(p), || format!("f(f^-1({p})) = {again:?}"));
                }
                Err(e) => w.push(format!("f^-1({p}): {e}")),
            }
        }
    })
}

type JointDistribution = BTreeMap<(Vec<usize>, usize), usize>;

fn joint(n: usize, stat: impl Fn(&Permutation) -> (Vec<usize>, usize)) -> Result<JointDistribution> {
    let mut out = JointDistribution::new();
    for p in enumerate(n)? {
        *out.entry(stat(&p)).or_default() += 1;
    }
    Ok(out)
}

pub(super) fn remark_3_7(n: usize, w: &mut Witnesses) -> Result<()> {
    let fix_maj = joint(n, |p| (fix_set(p), maj(p)))?;
    let rix_aid = joint(n, |p| {
        let s = statistics(p);
        (s.rix_set, s.aid)
    })?;
    w.require(fix_maj != rix_aid, || format!("n={n}: (FIX, maj) and (RIX, aid) are equidistributed: {fix_maj:?}"));
    // positive control: the counting version is equidistributed
    let exc_fix_maj = joint(n, |p| (vec![exc(p), fix_set(p).len()], maj(p)))?;
    let des_rix_aid = joint(n, |p| {
        let s = statistics(p);
        (vec![s.des, s.rix], s.aid)
    })?;
    w.require(exc_fix_maj == des_rix_aid, || format!("n={n}: (exc, fix, maj) and (des, rix, aid) differ"));
    Ok(())
}

/// The printed table: D~(4,2), its image under f^-1, and the image of that under Phi.
pub const TABLE_1: [[&str; 5]; 3] = [
    ["1324", "1423", "2314", "2413", "3412"],
    ["4132", "1432", "4213", "2431", "3421"],
    ["4312", "4321", "2413", "3412", "2143"],
];

fn show(set: &BTreeSet<Permutation>) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

pub(super) fn table_1(n: usize, w: &mut Witnesses) -> Result<()> {
    let parse = |s: &str| s.parse::<Permutation>();
    let family = |pick: fn(&Permutation) -> bool| -> Result<BTreeSet<Permutation>> {
        Ok(enumerate(n)?.filter(&pick).collect())
    };
    let d_tilde = family(|p| classify(p).no_double_descent_final_ascent == Some(2))?;
    let r0 = family(|p| classify(p).rix_free_one_double_descent == Some(2))?;
    let e = family(|p| classify(p).derangement_no_cda == Some(2))?;

    let printed: Vec<Vec<Permutation>> =
        TABLE_1.iter().map(|row| row.iter().map(|s| parse(s)).collect::<Result<_>>()).collect::<Result<_>>()?;
    let listed: BTreeSet<Permutation> = printed[0].iter().cloned().collect();
    w.require(listed == d_tilde, || format!("first row {} is not D~(4,2) = {}", show(&listed), show(&d_tilde)));
    for (col, d) in printed[0].iter().enumerate() {
        let r = f_inv(d)?;
        w.require(r == printed[1][col], || format!("column {}: f^-1({d}) = {r}, printed {}", col + 1, printed[1][col]));
        w.require(r0.contains(&printed[1][col]), || {
            let dd = shape_counts(&printed[1][col]).dd;
            format!("column {}: printed {} is not in R0(4,2) (dd = {dd})", col + 1, printed[1][col])
        });
        let image = phi(&r);
        w.require(image == printed[2][col], || format!("column {}: Phi({r}) = {image}, printed {}", col + 1, printed[2][col]));
        w.require(e.contains(&printed[2][col]), || {
            format!("column {}: printed {} is not in E(4,2) = {}", col + 1, printed[2][col], show(&e))
        });
    }
    Ok(())
}
