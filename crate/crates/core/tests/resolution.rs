use hankel_blowup::clique::{enumerate_maximal_cliques, CliqueGraph, CliqueSet, ColonData};
use hankel_blowup::linalg::Fp;
use hankel_blowup::resolution::{
    betti_summary, koszul_complex, mapping_cone_resolution, minimize, resolve_dual, taylor_betti, taylor_complex,
    FreeComplex,
};
use hankel_blowup::{OrderKind, ScrollParams, VarSet};
use num_rational::BigRational;
use num_traits::One;

fn cliques(r: usize, c: usize, d: usize, kind: OrderKind) -> (CliqueSet, Vec<ColonData>) {
    let g = CliqueGraph::new(ScrollParams::new(r, c, d).unwrap()).unwrap();
    let set = enumerate_maximal_cliques(&g, kind, 5000).unwrap();
    let colons = set.colon_all().unwrap();
    (set, colons)
}

fn s(ids: &[usize]) -> VarSet {
    ids.iter().copied().collect()
}

#[test]
fn koszul_shapes() {
    let one: FreeComplex = koszul_complex(&[s(&[3])], VarSet::EMPTY).unwrap();
    assert_eq!(one.length(), 1);
    let (u, v) = (s(&[0]), s(&[1, 2]));
    let k: FreeComplex = koszul_complex(&[u, v], s(&[5])).unwrap();
    assert_eq!(k.ranks(), vec![1, 2, 1]);
    assert_eq!(k.labels(2), &[s(&[0, 1, 2, 5])]);
    // the relation column is (v, -u) up to a global sign
    let col = &k.differential(2)[0];
    assert_eq!(col.len(), 2);
    let top = k.labels(2)[0];
    let coef_of = |g: VarSet| {
        let row = k.labels(1).iter().position(|&l| top.quotient(l) == g).unwrap();
        col[&row].clone()
    };
    let (cu, cv) = (coef_of(v), coef_of(u));
    assert_eq!(cu, -cv.clone());
    assert!(cv == BigRational::one() || cv == -BigRational::one());
}

#[test]
fn dual_generator_degrees() {
    let (set, _) = cliques(2, 8, 1, OrderKind::Lex);
    let n = set.graph.vars().len();
    assert_eq!(n, 28);
    assert!(set.dual_generators().iter().all(|g| g.len() == 19));
    let (set, _) = cliques(3, 4, 1, OrderKind::Lex);
    let p = set.graph.params();
    assert!(set.dual_generators().iter().all(|g| g.len() == p.n_y_vars() - (p.r() * p.d() + 1)));
}

#[test]
fn cone_is_a_resolution_in_every_squarefree_degree() {
    let (set, colons) = cliques(2, 5, 1, OrderKind::Lex);
    let gens = set.dual_generators();
    let colon_gens: Vec<Vec<VarSet>> = colons.iter().map(|c| c.minimal_generators.clone()).collect();
    let cone = mapping_cone_resolution::<BigRational>(&gens, &colon_gens).unwrap();
    assert!(cone.is_complex());
    let n = set.graph.vars().len();
    for b in 0u128..(1 << n) {
        let b = VarSet::from_bits(b);
        let indicator = i64::from(!gens.iter().any(|g| g.divides(b)));
        assert_eq!(cone.euler_characteristic_at(b), indicator);
    }
    // full homology on the lcm lattice of pairs
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            assert!(cone.is_exact_at(a.lcm(*b), &gens));
        }
    }
    let min = minimize(cone.clone());
    assert!(min.is_complex());
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            let m = a.lcm(*b);
            assert_eq!(min.euler_characteristic_at(m), cone.euler_characteristic_at(m));
            assert!(min.is_exact_at(m, &gens));
        }
    }
}

#[test]
fn cone_ranks_count_koszul_modules() {
    let (set, colons) = cliques(2, 8, 1, OrderKind::Lex);
    let res = resolve_dual::<BigRational>(&set, &colons).unwrap();
    let expected: usize = colons.iter().map(|c| 1usize << c.codim).sum();
    assert_eq!(res.cone_ranks.iter().skip(1).sum::<usize>(), expected);
    let sum = betti_summary(&res.betti).unwrap();
    assert_eq!(sum.pd, 4);
    assert!(sum.is_linear);
    assert!(sum.top_betti > 1);
}

#[test]
fn lex_cone_is_not_minimal_at_361() {
    let (set, colons) = cliques(3, 6, 1, OrderKind::Lex);
    let res = resolve_dual::<BigRational>(&set, &colons).unwrap();
    assert_eq!(res.cone_ranks.len() - 2, 5);
    assert_eq!(res.betti.pd(), 4);
    let (set, colons) = cliques(3, 6, 1, OrderKind::Revlex);
    let rev = resolve_dual::<BigRational>(&set, &colons).unwrap();
    assert_eq!(rev.cone_ranks.len() - 2, 4);
    assert_eq!(rev.betti, res.betti);
}

#[test]
fn taylor_fallback_and_cancellation_of_a_redundant_colon_generator() {
    // the clique with a canceled tail: feed the tail back in as a redundant generator
    let (set, colons) = cliques(2, 8, 1, OrderKind::Lex);
    let t = colons.iter().position(|c| c.tail.as_ref().is_some_and(|t| !c.minimal_generators.contains(&t.monomial)));
    let t = t.expect("a clique with a canceled tail");
    let gens = set.dual_generators();
    let mut colon_gens: Vec<Vec<VarSet>> = colons[..=t].iter().map(|c| c.minimal_generators.clone()).collect();
    colon_gens[t].push(colons[t].tail.as_ref().unwrap().monomial);
    let padded = mapping_cone_resolution::<BigRational>(&gens[..=t], &colon_gens).unwrap();
    colon_gens[t].pop();
    let plain = mapping_cone_resolution::<BigRational>(&gens[..=t], &colon_gens).unwrap();
    assert!(padded.total_rank() > plain.total_rank());
    let (a, b) = (minimize(padded), minimize(plain));
    assert_eq!(a.ideal_betti_table(), b.ideal_betti_table());
}

#[test]
fn minimize_fixes_minimal_complexes() {
    let k: FreeComplex = koszul_complex(&[s(&[0]), s(&[1]), s(&[2, 3])], VarSet::EMPTY).unwrap();
    assert_eq!(minimize(k.clone()), k);
    let t: FreeComplex = taylor_complex(&[s(&[0, 1]), s(&[1, 2]), s(&[0, 2])], VarSet::EMPTY).unwrap();
    assert_eq!(minimize(t).ranks(), vec![1, 3, 2]);
}

#[test]
fn taylor_oracle_small_cases() {
    let one = taylor_betti::<BigRational>(&[s(&[0, 1, 2])], 18).unwrap();
    assert_eq!(one.entries.len(), 1);
    assert_eq!(one.get(0, 3), 1);
    let two = taylor_betti::<BigRational>(&[s(&[0]), s(&[1, 2])], 18).unwrap();
    assert_eq!((two.get(0, 1), two.get(0, 2), two.get(1, 3)), (1, 1, 1));
    let big: Vec<VarSet> = (0..19).map(|i| s(&[i])).collect();
    assert!(taylor_betti::<Fp>(&big, 18).unwrap_err().is_budget());
}

#[test]
fn taylor_oracle_agrees_with_cone() {
    for (r, c, d) in [(2, 5, 1), (2, 4, 1), (2, 6, 1), (2, 5, 2), (3, 5, 1)] {
        let (set, colons) = cliques(r, c, d, OrderKind::Lex);
        let gens = set.dual_generators();
        if gens.len() > 18 {
            continue;
        }
        let res = resolve_dual::<BigRational>(&set, &colons).unwrap();
        let oracle = taylor_betti::<Fp>(&gens, 18).unwrap();
        assert_eq!(res.betti, oracle, "({r},{c},{d})");
    }
}

#[test]
fn prime_field_mode_matches_rationals() {
    let (set, colons) = cliques(3, 6, 1, OrderKind::Revlex);
    let q = resolve_dual::<BigRational>(&set, &colons).unwrap();
    let p = resolve_dual::<Fp>(&set, &colons).unwrap();
    assert_eq!(q.betti, p.betti);
}

#[test]
fn betti_exports() {
    let (set, colons) = cliques(2, 5, 1, OrderKind::Lex);
    let res = resolve_dual::<BigRational>(&set, &colons).unwrap();
    let csv = res.betti.to_csv();
    assert!(csv.starts_with("i,"));
    assert_eq!(csv.lines().count(), res.betti.pd() + 2);
    let j = res.betti.to_json();
    assert_eq!(j["pd"], res.betti.pd());
}
