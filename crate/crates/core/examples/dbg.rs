// dev: incremental gamma selection by subchain certificates at g=5
use mcg::atlas::paths::{curve_from_jumps};
use mcg::atlas::Bench;
use mcg::surface::*;
use num_bigint::BigUint;
use num_traits::Zero;

type W = Vec<(NormalCurve, i64)>;
fn pow(w: &W, k: usize) -> W { let mut v = W::new(); for _ in 0..k { v.extend(w.iter().cloned()); } v }
fn inv(w: &W) -> W { w.iter().rev().map(|(c, n)| (c.clone(), -n)).collect() }
fn cat(ws: &[&W]) -> W { let mut v = W::new(); for w in ws { v.extend(w.iter().cloned()); } v }
fn side(l: (usize, bool, i64)) -> usize {
    let (i, isb, s) = l;
    if !isb { if s > 0 { 4 * (i - 1) + 1 } else { 4 * (i - 1) + 3 } }
    else if s > 0 { 4 * (i - 1) } else { 4 * (i - 1) + 2 }
}

fn main() {
    let g = 5usize;
    let t = Triangulation::base(g).unwrap();
    let mut curves: Vec<(String, NormalCurve)> = Vec::new();
    for i in 1..=g {
        curves.push((format!("a{i}"), curve_from_jumps(&t, &[4 * (i - 1) + 1]).unwrap()));
        curves.push((format!("b{i}"), curve_from_jumps(&t, &[4 * (i - 1)]).unwrap()));
    }
    let get = |cs: &Vec<(String, NormalCurve)>, n: &str| -> NormalCurve { cs.iter().find(|(m, _)| m == n).unwrap().1.clone() };
    let mut bench = Bench::new(&t);
    let mut letters = Vec::new();
    for i in 1..=g { for isb in [false, true] { for s in [1i64, -1] { letters.push((i, isb, s)); } } }
    let mut chain: Vec<NormalCurve> = vec![get(&curves, "a1"), get(&curves, "b1")];
    let mut gammas: Vec<NormalCurve> = Vec::new();
    let mut primed: Vec<NormalCurve> = Vec::new();
    for i in 1..g {
        // candidates for gamma_i
        let mut cands: Vec<NormalCurve> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        if i == 1 {
            cands.push(curve_from_jumps(&t, &[7, 3]).unwrap());
        }
        for s in [1i64, -1] { for tt in [1i64, -1] {
            let mut conjs: Vec<Vec<(usize, bool, i64)>> = vec![vec![]];
            for &x in &letters { conjs.push(vec![x]); }
            for &x in &letters { for &y in &letters { conjs.push(vec![x, y]); } }
            for conj in conjs {
                let mut word: Vec<(usize, bool, i64)> = vec![(i, false, s)];
                word.extend(conj.iter().cloned());
                word.push((i + 1, false, tt));
                for &(q, b, e) in conj.iter().rev() { word.push((q, b, -e)); }
                let jumps: Vec<usize> = word.iter().map(|&l| side(l)).collect();
                let Ok(c) = curve_from_jumps(&t, &jumps) else { continue };
                if !seen.insert(c.weights.clone()) { continue; }
                if components(&t, &c.weights).unwrap_or(0) != 1 { continue; }
                let mut ok = true;
                for (n, k) in &curves {
                    let want: u32 = u32::from(n == &format!("b{i}") || n == &format!("b{}", i + 1));
                    if intersection(&t, &c, k).map(|v| v != BigUint::from(want)).unwrap_or(true) { ok = false; break; }
                }
                if !ok { continue; }
                for gprev in &gammas {
                    if intersection(&t, &c, gprev).map(|v| !v.is_zero()).unwrap_or(true) { ok = false; break; }
                }
                if ok { cands.push(c); }
            }
        }}
        // select by the subchain certificate
        let a_next = get(&curves, &format!("a{}", i + 1));
        let b_next = get(&curves, &format!("b{}", i + 1));
        let mut chosen = None;
        for c in cands {
            let mut sub: W = chain.iter().map(|k| (k.clone(), 1i64)).collect();
            sub.push((c.clone(), 1));
            let f = pow(&sub, 2 * i + 2);
            // growth on b_{i+1}
            let mut z = b_next.clone();
            for _ in 0..4 { z = bench.apply(&f, &z).unwrap(); }
            let z2 = bench.apply(&f, &z).unwrap();
            let gr: Vec<BigUint> = z2.weights.iter().zip(&z.weights).map(|(x, y)| x - y).collect();
            // D = gr - a_next
            let mut d = Vec::new();
            let mut ok = true;
            for (x, y) in gr.iter().zip(&a_next.weights) {
                if x < y { ok = false; break; }
                d.push(x - y);
            }
            if !ok || d.iter().all(|x| x.is_zero()) { continue; }
            let Ok(dcurve) = NormalCurve::new(&t, d) else { continue };
            if components(&t, &dcurve.weights).unwrap_or(0) != 1 { continue; }
            let mut rel = f.clone();
            rel.push((dcurve.clone(), -1));
            rel.push((a_next.clone(), -1));
            let pass = curves.iter().all(|(_, k)| bench.apply(&rel, k).map(|v| v == *k).unwrap_or(false))
                && bench.apply(&rel, &c).map(|v| v == c).unwrap_or(false)
                && gammas.iter().all(|gp| bench.apply(&rel, gp).map(|v| v == *gp).unwrap_or(false));
            if pass {
                println!("gamma_{i} selected: {c:?}");
                println!("   primed a{} extracted: {dcurve:?}", i + 1);
                chain.push(c.clone());
                chain.push(b_next.clone());
                gammas.push(c.clone());
                primed.push(dcurve);
                chosen = Some(());
                break;
            }
        }
        if chosen.is_none() {
            println!("gamma_{i}: NO CANDIDATE PASSES");
            return;
        }
    }
    println!("ALL GAMMAS SELECTED");
}
