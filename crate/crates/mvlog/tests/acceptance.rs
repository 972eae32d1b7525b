//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (run with `--nocapture` to see them).
//!
//! Four criteria assert claims that the catalog's own tables refute; those
//! tests fail with the computed values and a pointer to the analysis in
//! the suite output (`mvlog verify-paper`). Everything else is green. All
//! comparisons are exact.

use mvlog::algebra;
use mvlog::eightk::{self, EightKCode};
use mvlog::formula::{parse_formula, parse_schema, Formula, Schema, Substitution};
use mvlog::hilbert::{self, Justification, MetaRule, Proof, ProofStep};
use mvlog::matrices::{
    self, classify_explosion, entails, is_valid, rule_sound, Conn, MatrixLogic,
    PartialExplosion,
};
use mvlog::registry::builtin;
use mvlog::translate::{self, HyperTable, Translation};

fn sch(text: &str) -> Schema {
    parse_schema(text).unwrap()
}

fn form(text: &str) -> Formula {
    parse_formula(text).unwrap()
}

fn assert_system_sound(system: &str, logic: &MatrixLogic) {
    let report = hilbert::soundness_report(&hilbert::system(system).unwrap(), logic).unwrap();
    assert!(
        report.sound(),
        "{system} should be sound in {}; unsound rules: {:?}",
        logic.name(),
        report.unsound_rules()
    );
}

fn rule_ok(logic: &MatrixLogic, premises: &[&str], conclusion: &str) -> bool {
    let prems: Vec<Schema> = premises.iter().map(|p| sch(p)).collect();
    rule_sound(logic, &prems, &sch(conclusion)).unwrap()
}

#[test]
fn criterion_01_pac_profile() {
    let pac = builtin("pac").unwrap();
    assert_system_sound("cmin", &pac);
    assert!(!is_valid(&pac, &sch("A -> (~A -> B)")).unwrap(), "tPS must be invalid in pac");
    assert!(
        !entails(&pac, &[form("p"), form("~p")], &form("q")).unwrap(),
        "p, ~p must not entail q in pac"
    );
    let clone = matrices::clone_functions_checked(&pac, 1, &pac.connectives()).unwrap();
    assert!(clone.exact);
    let half = pac.value_of_label("1/2").unwrap();
    for f in &clone.functions {
        assert_eq!(f.table[half as usize], half, "clone member {} must fix 1/2", f.witness);
    }
    let profile = classify_explosion(&pac, 6).unwrap();
    assert!(profile.clone_exact);
    assert!(profile.bottom.is_none(), "pac has no bottom particle");
    assert!(profile.strong_negation.is_none(), "pac has no strong negation");
    assert!(matches!(profile.partial, PartialExplosion::OnlyTopParticles));
    println!("criterion 1 (pac profile): PASS");
}

#[test]
fn criterion_02_min9_independence() {
    let m = builtin("thm3.3").unwrap();
    let report = hilbert::soundness_report(&hilbert::system("cmin").unwrap(), &m).unwrap();
    assert_eq!(report.unsound_rules(), vec!["Min9"], "exactly Min9 fails");
    println!("criterion 2 (Min9 independence): PASS");
}

#[test]
fn criterion_03_p1_facts() {
    let p1 = builtin("p1").unwrap();
    for schema in ["~(A & ~A)", "~(~A & A)", "A -> ~~A"] {
        assert!(!is_valid(&p1, &sch(schema)).unwrap(), "{schema} must be invalid in p1");
    }
    assert_system_sound("bc", &p1);
    assert_system_sound("civw", &p1);
    println!("criterion 3 (p1): PASS");
}

#[test]
fn criterion_04_lfi1_facts() {
    let lfi1 = builtin("lfi1").unwrap();
    assert_system_sound("ci", &lfi1);
    for rule in ["cj1a", "cj1b", "cj2a", "cj2b", "cj3a", "cj3b", "ce"] {
        let r = hilbert::named_rule(rule).unwrap();
        assert!(
            rule_sound(&lfi1, &r.premises, &r.conclusion).unwrap(),
            "{rule} must be sound in lfi1"
        );
    }
    assert!(is_valid(&lfi1, &sch("~(A & ~A)")).unwrap());
    assert!(!is_valid(&lfi1, &sch("A -> (~A -> B)")).unwrap());
    let rules: [(&str, &str, &str); 12] = [
        ("i", "~A -> B", "A | B"),
        ("ii", "A | B", "~A -> B"),
        ("iii", "~(~A -> B)", "~(A | B)"),
        ("iv", "~(A | B)", "~(~A -> B)"),
        ("v", "A -> B", "~(A & ~B)"),
        ("vi", "~(A & ~B)", "A -> B"),
        ("vii", "~(A -> B)", "A & ~B"),
        ("viii", "A & ~B", "~(A -> B)"),
        ("ix", "~(A & B)", "~A | ~B"),
        ("x", "~A | ~B", "~(A & B)"),
        ("xi", "~(~A | ~B)", "A & B"),
        ("xii", "A & B", "~(~A | ~B)"),
    ];
    let holds = ["i", "iii", "iv", "v", "vii", "viii", "ix", "x", "xi", "xii"];
    for (tag, prem, concl) in rules {
        assert_eq!(
            rule_ok(&lfi1, &[prem], concl),
            holds.contains(&tag),
            "interdefinability rule ({tag}) in lfi1"
        );
    }
    println!("criterion 4 (lfi1): PASS");
}

#[test]
fn criterion_05_incons_axiom_countermodels() {
    let m23 = builtin("thm3.23").unwrap();
    assert_system_sound("bc", &m23);
    assert!(rule_ok(&m23, &["~*A"], "o A"), "bc2 sound in thm3.23");
    assert!(!rule_ok(&m23, &["~o A"], "*A"), "bc3 unsound in thm3.23");

    let m24 = builtin("thm3.24").unwrap();
    assert_system_sound("bbc", &m24);
    assert!(!rule_ok(&m24, &["*A"], "~o A"), "bc4 unsound in thm3.24");
    assert!(!rule_ok(&m24, &["o A"], "~*A"), "bc5 unsound in thm3.24");

    let m27 = builtin("thm3.27").unwrap();
    assert_system_sound("bbbc", &m27);
    assert!(!is_valid(&m27, &sch("o A -> ~~o A")).unwrap());
    assert!(!is_valid(&m27, &sch("*A -> ~~*A")).unwrap());

    let m28 = builtin("thm3.28").unwrap();
    assert_system_sound("bbbc", &m28);
    assert!(is_valid(&m28, &sch("o A -> ~~o A")).unwrap());
    assert!(is_valid(&m28, &sch("*A -> ~~*A")).unwrap());
    assert!(!is_valid(&m28, &sch("A -> ~~A")).unwrap());

    // The four-valued tables, transcribed exactly as printed, do not
    // deliver the advertised independence: their consistency column
    // designates the middle values, which breaks bc1 (and bc2) outright,
    // and the bc4/bc5 targets come out sound. The assertions state the
    // advertised behavior and fail; `mvlog verify-paper --section 3.25`
    // shows the computed outcome and a repaired-negation variant that
    // does deliver both halves.
    let m25a = builtin("thm3.25a").unwrap();
    assert_system_sound("bbc", &m25a);
    assert!(rule_ok(&m25a, &["o A"], "~*A"), "bc5 sound in thm3.25a");
    assert!(!rule_ok(&m25a, &["*A"], "~o A"), "bc4 unsound in thm3.25a");
    let m25b = builtin("thm3.25b").unwrap();
    assert_system_sound("bbc", &m25b);
    assert!(rule_ok(&m25b, &["*A"], "~o A"), "bc4 sound in thm3.25b");
    assert!(!rule_ok(&m25b, &["o A"], "~*A"), "bc5 unsound in thm3.25b");
    println!("criterion 5 (independence countermodels): PASS");
}

#[test]
fn criterion_06_controllable_explosion_boundary() {
    let m = builtin("fact3.50").unwrap();
    assert_system_sound("ci", &m);
    assert!(
        !is_valid(&m, &sch("o (~A & o A)")).unwrap(),
        "consistency of the canonical strong negation must fail"
    );
    println!("criterion 6 (fact3.50 boundary): PASS");
}

#[test]
fn criterion_07_urbas_ec_eo() {
    let u = builtin("thm3.53urbas").unwrap();
    assert_system_sound("bc", &u);
    assert!(!is_valid(&u, &sch("A -> (~A -> B)")).unwrap());
    assert!(!is_valid(&u, &sch("~(A & ~A)")).unwrap());
    let eo = hilbert::metarule_sound_bounded(&u, MetaRule::Eo, 5).unwrap();
    assert!(eo.ok(), "EO must have no violation at bound 5");
    // The matrix-level EC check quantifies over every pair of terms with
    // equal designation patterns; the pair A & B / A & ~~B is such a pair
    // (both designated only at 1, 1 since the values force double
    // negation to preserve designation without being the identity), and
    // their negations separate. The claim as stated is therefore
    // unattainable at matrix level -- an exhaustive search over all
    // negation columns compatible with the printed binary tables finds no
    // table satisfying it -- and this assertion records the failure.
    let ec = hilbert::metarule_sound_bounded(&u, MetaRule::Ec, 5).unwrap();
    assert!(
        ec.ok(),
        "EC at bound 5 reports a violation: {:?}; see `mvlog verify-paper --section 3.53`",
        match &ec {
            hilbert::MetaVerdict::Violation { premise_term, conclusion_term } =>
                format!("{premise_term} / {conclusion_term}"),
            _ => unreachable!(),
        }
    );
    println!("criterion 7 (urbas EC/EO): PASS");
}

#[test]
fn criterion_08_family_census_and_distinctness() {
    let census = eightk::census();
    assert_eq!(census.total, 8192);
    assert_eq!(census.extend_cia, 8192, "every member must validate cia");
    assert_eq!(census.tps_invalid, 8192);
    assert_eq!(census.cons_strong_neg_valid, 8192, "o -A must be valid in every member");
    let cert = eightk::separation_certificate();
    assert!(cert.probe_vectors_ok);
    assert_eq!(cert.pairs_separated, 8192 * 8191 / 2);
    assert!(cert.max_separator_size <= 7);
    assert_eq!(census.dc_systems, 7680);
    assert_eq!(census.neg_conj_defines_cons, 4096);
    // The two counts below are quoted without proof in the source. The
    // census is the oracle here and disagrees: the three co-group rules
    // pin nine of the thirteen free cells exactly, so 2^4 = 16 members
    // extend cio (12 of them in the ~(A & ~A) class). The assertions
    // state the quoted counts and fail; see
    // `mvlog verify-paper --section 3.73`.
    assert_eq!(
        census.extend_cio, 1680,
        "quoted count 1,680 vs computed {} members extending cio",
        census.extend_cio
    );
    assert_eq!(
        census.extend_cilo, 980,
        "quoted count 980 vs computed {} cio-extending members in the ~(A & ~A) class",
        census.extend_cilo
    );
    println!("criterion 8 (census + distinctness): PASS");
}

#[test]
fn criterion_09_blok_pigozzi_over_family() {
    let e = sch("(A <-> B) & (o A <-> o B)");
    let delta = sch("(A -> A) -> A");
    let eps = sch("A -> A");
    let mut failing = Vec::new();
    for code in EightKCode::all() {
        let logic = eightk::build_logic(code);
        if !algebra::blok_pigozzi_check(&logic, &e, &delta, &eps).unwrap() {
            failing.push(code.get());
        }
    }
    // The printed delta/epsilon pair fails condition (iii) on exactly the
    // 2,048 codes with `1/2 -> 1/2 = 1` and `1 -> 1/2 = 1/2`: there
    // delta(1/2) = 1/2 while epsilon(1/2) = 1, and the equivalence
    // connective relates a value only to itself. The corrected pair
    // (o A & A, o A & (A | o A)) passes every member, so the family is
    // algebraizable; only the quoted witness is defective. This assertion
    // states the quoted claim and fails; see
    // `mvlog verify-paper --section 3.82`.
    assert!(
        failing.is_empty(),
        "printed delta/epsilon pair fails on {} codes (first: {}); all have bit 11 set and bit 9 clear",
        failing.len(),
        failing[0]
    );
    println!("criterion 9 (algebraizability witness): PASS");
}

#[test]
fn criterion_10_mortensen_leibniz_gap() {
    let m = builtin("thm3.83mortensen").unwrap();
    let congs = algebra::enumerate_congruences(&m, true).unwrap();
    assert_eq!(congs.len(), 1, "exactly one designation-compatible congruence");
    assert!(congs[0].is_identity());
    let filters = algebra::lattice_filters(&m).unwrap();
    assert!(filters.len() >= 2, "at least two lattice filters; got {}", filters.len());
    assert_system_sound("cibaw", &m);
    let verdict = algebra::filter_congruence_comparison(&m).unwrap();
    assert!(!verdict.isomorphic_counts, "filter/congruence counts must differ");
    println!(
        "criterion 10 (mortensen): PASS ({} filters vs {} congruence)",
        verdict.filters, verdict.congruences
    );
}

#[test]
fn criterion_11_t1_conservativity() {
    let cpl = builtin("cpl").unwrap();
    for target in ["lfi1", "p1"] {
        let tgt = builtin(target).unwrap();
        let report =
            translate::conservativity_check(Translation::T1, &cpl, &tgt, 2, 5).unwrap();
        assert!(report.holds(), "t1 into {target}: {:?}", report.counterexample);
    }
    let ecpl = builtin("ecpl").unwrap();
    let lfi1 = builtin("lfi1").unwrap();
    let report = translate::conservativity_check(Translation::T1e, &ecpl, &lfi1, 2, 5).unwrap();
    assert!(report.holds(), "t1e into lfi1: {:?}", report.counterexample);
    println!("criterion 11 (t1/t1e conservativity): PASS");
}

// A tiny deterministic generator for proofs that mixes premises, axiom
// instances, modus ponens and the gentle-explosion rule.
struct ProofGen {
    state: u64,
}

impl ProofGen {
    fn new(seed: u64) -> ProofGen {
        ProofGen { state: seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493) }
    }

    fn next(&mut self, bound: usize) -> usize {
        self.state ^= self.state << 13;
        self.state ^= self.state >> 7;
        self.state ^= self.state << 17;
        (self.state % bound as u64) as usize
    }

    fn small_formula(&mut self) -> Formula {
        let atoms = ["p", "q", "r"];
        match self.next(5) {
            0 | 1 => Formula::atom(atoms[self.next(3)]),
            2 => Formula::neg(Formula::atom(atoms[self.next(3)])),
            3 => Formula::imp(
                Formula::atom(atoms[self.next(3)]),
                Formula::atom(atoms[self.next(3)]),
            ),
            _ => Formula::and(
                Formula::atom(atoms[self.next(3)]),
                Formula::atom(atoms[self.next(3)]),
            ),
        }
    }
}

#[test]
fn criterion_12_deduction_round_trips() {
    let sys = hilbert::system("bc").unwrap();
    for seed in 0..100u64 {
        let mut gen = ProofGen::new(seed + 1);
        let discharged = gen.small_formula();
        let mut proof = Proof::default();
        proof
            .steps
            .push(ProofStep { formula: discharged.clone(), just: Justification::Premise });
        let steps = 3 + gen.next(6);
        for _ in 0..steps {
            match gen.next(3) {
                // chain a fresh implication premise and apply modus ponens
                0 => {
                    let minor_idx = 1 + gen.next(proof.steps.len());
                    let minor = proof.steps[minor_idx - 1].formula.clone();
                    let target = gen.small_formula();
                    let imp = Formula::imp(minor.clone(), target.clone());
                    proof.steps.push(ProofStep { formula: imp, just: Justification::Premise });
                    let major_idx = proof.steps.len();
                    let mut subst = Substitution::new();
                    subst.insert("A".into(), minor);
                    subst.insert("B".into(), target.clone());
                    proof.steps.push(ProofStep {
                        formula: target,
                        just: Justification::Rule {
                            name: "MP".into(),
                            subst,
                            from: vec![minor_idx, major_idx],
                        },
                    });
                }
                // an axiom instance
                1 => {
                    let axioms = ["Min1", "Min4", "Min6", "Min10", "Min11"];
                    let name = axioms[gen.next(axioms.len())];
                    let rule = sys.rule(name).unwrap().clone();
                    let mut subst = Substitution::new();
                    for mv in rule.conclusion.metavars() {
                        subst.insert(mv, gen.small_formula());
                    }
                    let formula = rule.conclusion.instantiate(&subst).unwrap();
                    proof.steps.push(ProofStep {
                        formula,
                        just: Justification::Rule { name: name.into(), subst, from: vec![] },
                    });
                }
                // gentle explosion from three fresh premises
                _ => {
                    let c = gen.small_formula();
                    let b = gen.small_formula();
                    let base = proof.steps.len();
                    proof.steps.push(ProofStep {
                        formula: Formula::cons(c.clone()),
                        just: Justification::Premise,
                    });
                    proof.steps.push(ProofStep { formula: c.clone(), just: Justification::Premise });
                    proof.steps.push(ProofStep {
                        formula: Formula::neg(c.clone()),
                        just: Justification::Premise,
                    });
                    let mut subst = Substitution::new();
                    subst.insert("A".into(), c);
                    subst.insert("B".into(), b.clone());
                    proof.steps.push(ProofStep {
                        formula: b,
                        just: Justification::Rule {
                            name: "bc1".into(),
                            subst,
                            from: vec![base + 1, base + 2, base + 3],
                        },
                    });
                }
            }
        }
        hilbert::check_proof(&sys, &proof).expect("generated proof checks");
        let conclusion = proof.conclusion().unwrap().clone();
        let out = hilbert::deduction_transform(&sys, &proof, &discharged).unwrap();
        hilbert::check_proof(&sys, &out)
            .unwrap_or_else(|e| panic!("seed {seed}: transformed proof fails: {e}"));
        assert_eq!(
            out.conclusion().unwrap(),
            &Formula::imp(discharged.clone(), conclusion),
            "seed {seed}: wrong transformed conclusion"
        );
        assert!(
            !out.premises().contains(&discharged),
            "seed {seed}: discharged premise must not survive"
        );
    }
    println!("criterion 12 (100 deduction round trips): PASS");
}

#[test]
fn criterion_13_hyperclassical_synthesis() {
    let mut checked = 0usize;
    for code in EightKCode::all() {
        let logic = eightk::build_logic(code);
        let neg: [u8; 3] = std::array::from_fn(|x| logic.neg_value(x as u8));
        translate::define_hyperclassical(&HyperTable::Unary(neg))
            .unwrap_or_else(|e| panic!("negation of code {code}: {e}"));
        checked += 1;
        for conn in [Conn::And, Conn::Or, Conn::Imp] {
            let table: [u8; 9] = std::array::from_fn(|i| {
                logic.apply_binary(conn, (i / 3) as u8, (i % 3) as u8).unwrap()
            });
            translate::define_hyperclassical(&HyperTable::Binary(table))
                .unwrap_or_else(|e| panic!("{} of code {code}: {e}", conn.symbol()));
            checked += 1;
        }
    }
    assert_eq!(checked, 4 * 8192);
    println!("criterion 13 (hyperclassical synthesis, {checked} tables): PASS");
}

#[test]
fn criterion_14_mortensen_axioms_in_p2() {
    let p2 = builtin("p2").unwrap();
    let sys = hilbert::system("c1/2").unwrap();
    for n in 1..=3u32 {
        assert!(
            hilbert::rule_sound_in(&sys, &p2, &hilbert::mortensen_m1(n)).unwrap(),
            "M1.{n} must be sound in p2"
        );
        for conn in [Conn::And, Conn::Or, Conn::Imp] {
            assert!(
                hilbert::rule_sound_in(&sys, &p2, &hilbert::mortensen_m2(n, conn)).unwrap(),
                "M2.{n}.{} must be sound in p2",
                conn.symbol()
            );
        }
    }
    println!("criterion 14 (M1/M2 in p2): PASS");
}
