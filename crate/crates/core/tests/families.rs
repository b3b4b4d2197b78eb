//! Library results against the plain oracle on every semigroup of order ≤ 3.

mod common;

use common::{labeled, to_set, to_sets, Oracle, Set};
use semideal_core::classify::{
    interior_chain, is_duo, is_interior_simple, is_intra_regular, is_regular,
};
use semideal_core::idealprops::{irreducible_witness, profiles};
use semideal_core::ideals::enumerate_subsemigroups;
use semideal_core::{
    enumerate_ideals, green_partition, principal, IdealKind, PrincipalKind, Relation, Semigroup,
};

fn corpus() -> Vec<Semigroup> {
    (1..=3).flat_map(labeled).collect()
}

fn oracle_family(o: &Oracle, kind: IdealKind) -> Vec<Set> {
    o.subsets()
        .into_iter()
        .filter(|a| match kind {
            IdealKind::Left => o.left(a),
            IdealKind::Right => o.right(a),
            IdealKind::TwoSided => o.two_sided(a),
            IdealKind::Quasi => o.quasi(a),
            IdealKind::Bi => o.bi(a),
            IdealKind::Interior => o.interior(a),
        })
        .collect()
}

#[test]
fn families_match_oracle() {
    for s in corpus() {
        let o = Oracle::new(&s);
        for kind in IdealKind::ALL {
            assert_eq!(
                to_sets(&enumerate_ideals(&s, kind)),
                oracle_family(&o, kind),
                "{kind} {:?}",
                s.rows()
            );
        }
        let subs: Vec<Set> = o.subsets().into_iter().filter(|a| o.closed(a)).collect();
        assert_eq!(to_sets(&enumerate_subsemigroups(&s)), subs);
    }
}

#[test]
fn hierarchy_on_order_three() {
    let all = labeled(3);
    assert_eq!(all.len(), 113);
    for s in &all {
        let o = Oracle::new(s);
        for a in o.subsets() {
            if o.two_sided(&a) {
                assert!(o.interior(&a));
            }
            if o.left(&a) || o.right(&a) {
                assert!(o.quasi(&a));
            }
            if o.quasi(&a) {
                assert!(o.bi(&a));
            }
        }
        let fam = |k| enumerate_ideals(s, k);
        let sub = |x: &[semideal_core::ElemSet], y: &[semideal_core::ElemSet]| {
            x.iter().all(|e| y.contains(e))
        };
        assert!(sub(&fam(IdealKind::TwoSided), &fam(IdealKind::Interior)));
        assert!(sub(&fam(IdealKind::Left), &fam(IdealKind::Quasi)));
        assert!(sub(&fam(IdealKind::Right), &fam(IdealKind::Quasi)));
        assert!(sub(&fam(IdealKind::Quasi), &fam(IdealKind::Bi)));
    }
}

#[test]
fn principal_sets_match_oracle() {
    for s in corpus() {
        let o = Oracle::new(&s);
        for a in 0..s.order() {
            assert_eq!(
                to_set(&principal(&s, a, PrincipalKind::L).unwrap()),
                o.l_of(a)
            );
            assert_eq!(
                to_set(&principal(&s, a, PrincipalKind::R).unwrap()),
                o.r_of(a)
            );
            assert_eq!(
                to_set(&principal(&s, a, PrincipalKind::I).unwrap()),
                o.i_of(a)
            );
            assert_eq!(
                to_set(&principal(&s, a, PrincipalKind::IN).unwrap()),
                o.in_of(a)
            );
        }
    }
}

#[test]
fn classifications_match_oracle() {
    for s in corpus() {
        let o = Oracle::new(&s);
        assert_eq!(is_regular(&s).is_some(), o.regular());
        let intra = (0..o.n).all(|a| o.sas(o.mul(a, a)).contains(&a));
        assert_eq!(is_intra_regular(&s).is_some(), intra);
        let duo = oracle_family(&o, IdealKind::Left) == oracle_family(&o, IdealKind::Right);
        assert_eq!(is_duo(&s), duo);
        let fam = o.interiors();
        let zero: Option<Set> = o.zero().map(|z| Set::from([z]));
        let simple = fam
            .iter()
            .all(|i| *i == o.all() || Some(i) == zero.as_ref());
        assert_eq!(is_interior_simple(&s), simple);
        let chain = fam
            .iter()
            .all(|a| fam.iter().all(|b| a.is_subset(b) || b.is_subset(a)));
        assert_eq!(interior_chain(&s), chain);
    }
}

#[test]
fn partitions_match_oracle() {
    for s in corpus() {
        let o = Oracle::new(&s);
        let cases: [(Relation, Vec<Set>); 4] = [
            (Relation::L, o.classes(|a| o.l_of(a))),
            (Relation::R, o.classes(|a| o.r_of(a))),
            (Relation::J, o.classes(|a| o.i_of(a))),
            (Relation::I, o.classes(|a| o.in_of(a))),
        ];
        for (r, expected) in cases {
            assert_eq!(to_sets(&green_partition(&s, r).classes), expected, "{r}");
        }
        let h = o.classes(|a| {
            // Pair of L- and R-principal sets, flattened into one key.
            let mut k: Set = o.l_of(a).iter().map(|x| x * 2).collect();
            k.extend(o.r_of(a).iter().map(|x| x * 2 + 1));
            k
        });
        assert_eq!(to_sets(&green_partition(&s, Relation::H).classes), h);
    }
}

#[test]
fn profiles_match_oracle() {
    for s in corpus() {
        let o = Oracle::new(&s);
        let fam = o.interiors();
        for p in profiles(&s) {
            let i = to_set(&p.elements);
            assert_eq!(p.semiprime, o.semiprime(&fam, &i));
            assert_eq!(p.prime, o.prime(&fam, &i));
            assert_eq!(p.strongly_prime, o.strongly_prime(&fam, &i));
            assert_eq!(p.irreducible, o.irreducible(&fam, &i));
            assert_eq!(p.idempotent, o.prod(&i, &i) == i);
            let cs = (0..o.n).all(|a| !i.contains(&o.mul(a, a)) || i.contains(&a));
            assert_eq!(p.completely_semiprime, cs);
        }
    }
}

#[test]
fn zorn_witness_on_order_three_and_below() {
    let mut checked = 0;
    for s in corpus() {
        let o = Oracle::new(&s);
        let fam = o.interiors();
        for i in enumerate_ideals(&s, IdealKind::Interior) {
            for a in (0..s.order()).filter(|&a| !i.contains(a)) {
                let b = irreducible_witness(&s, &i, a).expect("witness exists");
                let bs = to_set(&b);
                assert!(o.interior(&bs));
                assert!(to_set(&i).is_subset(&bs) && !bs.contains(&a));
                assert!(o.irreducible(&fam, &bs));
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}
