//! Property tests: parser/printer round trips, schema-instance validity,
//! and the structural consequence-relation laws checked on random small
//! instances.

use mvlog::formula::{parse_formula, render, Formula, Schema, Substitution};
use mvlog::matrices::{entails, evaluate, is_valid, MatrixLogic, Valuation};
use mvlog::registry::builtin;
use proptest::prelude::*;

fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::atom("p")),
        Just(Formula::atom("q")),
        Just(Formula::atom("r")),
        Just(Formula::atom("s1")),
    ];
    leaf.prop_recursive(5, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            inner.clone().prop_map(Formula::cons),
            inner.clone().prop_map(Formula::incons),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

fn arb_schema() -> impl Strategy<Value = Schema> {
    let leaf = prop_oneof![Just(Schema::metavar("A")), Just(Schema::metavar("B"))];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Schema::neg),
            inner.clone().prop_map(Schema::cons),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Schema::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Schema::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Schema::imp(a, b)),
        ]
    })
}

fn random_valuation(logic: &MatrixLogic, f: &Formula, seed: usize) -> Valuation {
    f.atoms()
        .into_iter()
        .enumerate()
        .map(|(i, a)| (a, ((seed + 3 * i) % logic.n()) as u8))
        .collect()
}

proptest! {
    #[test]
    fn parse_render_round_trip(f in arb_formula()) {
        let text = render(&f);
        let back = parse_formula(&text).expect("rendered text parses");
        prop_assert_eq!(back, f);
    }

    #[test]
    fn schema_validity_matches_instance_validity(s in arb_schema(), seed in 0usize..27) {
        // A valid schema stays designated under every instantiation; an
        // invalid one has some refuting instantiation, and substituting
        // fresh atoms for metavariables realizes one.
        let lfi1 = builtin("lfi1").unwrap();
        let mut subst = Substitution::new();
        subst.insert("A".into(), Formula::atom("x"));
        subst.insert("B".into(), Formula::atom("y"));
        let instance = s.instantiate(&subst).unwrap();
        let schema_valid = is_valid(&lfi1, &s).unwrap();
        let instance_valid = entails(&lfi1, &[], &instance).unwrap();
        prop_assert_eq!(schema_valid, instance_valid);
        if schema_valid {
            // spot-check an arbitrary compound instantiation
            let mut rich = Substitution::new();
            rich.insert("A".into(), parse_formula("x & ~y").unwrap());
            rich.insert("B".into(), parse_formula("o x | y").unwrap());
            let inst = s.instantiate(&rich).unwrap();
            let v = random_valuation(&lfi1, &inst, seed);
            let value = evaluate(&lfi1, &inst, &v).unwrap();
            prop_assert!(lfi1.is_designated(value));
        }
    }

    #[test]
    fn entailment_is_monotonic(a in arb_formula(), b in arb_formula(), c in arb_formula()) {
        // no cons/incons tables in pac: route the query through lfi1
        let logic = builtin("lfi1").unwrap();
        let small = [a.clone()];
        let large = [a, b];
        if entails(&logic, &small, &c).unwrap() {
            prop_assert!(entails(&logic, &large, &c).unwrap());
        }
    }

    #[test]
    fn entailment_satisfies_cut(a in arb_formula(), b in arb_formula(), c in arb_formula()) {
        let logic = builtin("lfi1").unwrap();
        // if Delta |- A and Gamma, A |- B then Delta, Gamma |- B
        let delta = [b.clone()];
        let gamma = [c.clone()];
        if entails(&logic, &delta, &a).unwrap()
            && entails(&logic, &[c.clone(), a.clone()], &b).unwrap()
        {
            let mut union = Vec::new();
            union.extend_from_slice(&delta);
            union.extend_from_slice(&gamma);
            prop_assert!(entails(&logic, &union, &b).unwrap());
        }
    }

    #[test]
    fn matrix_files_round_trip(seed in 0u32..8192) {
        let code = mvlog::eightk::EightKCode::new(seed).unwrap();
        let logic = mvlog::eightk::build_logic(code);
        let json = mvlog::registry::matrix_to_json(&logic);
        let back = mvlog::registry::matrix_from_json(&json).unwrap();
        prop_assert_eq!(back, logic);
    }

    #[test]
    fn power_recurrence(n in 1u32..7) {
        let lhs = parse_formula(&format!("p^({})", n + 1)).unwrap();
        let rhs = Formula::and(
            parse_formula(&format!("p^({n})")).unwrap(),
            parse_formula(&format!("p^{}", n + 1)).unwrap(),
        );
        prop_assert_eq!(lhs, rhs);
    }
}
