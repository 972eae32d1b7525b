//! The one-shot reproduction suite: every matrix-level result the catalog
//! encodes, re-derived from scratch and reported line by line.
//!
//! Each check names its catalog section, what was expected and what was
//! computed. Failures are report lines, not panics: where a source table
//! does not deliver its advertised behavior, the suite says so explicitly
//! (see the `3.25` and `3.82` entries, and the two census counts quoted
//! without proof).

use crate::algebra;
use crate::eightk::{self, EightKCode};
use crate::formula::{parse_formula, parse_schema, Formula, Schema};
use crate::hilbert::{self, MetaRule};
use crate::matrices::{
    self, classify_explosion, entails, is_valid, rule_sound, MatrixLogic, PartialExplosion,
};
use crate::registry::builtin;
use crate::translate::{self, HyperTable, Translation};
use rayon::prelude::*;
use serde::Serialize;

/// One suite line.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub section: &'static str,
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize, Default)]
pub struct SuiteReport {
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }
}

struct Suite<'a> {
    filter: Option<&'a str>,
    report: SuiteReport,
}

impl<'a> Suite<'a> {
    fn wants(&self, section: &str) -> bool {
        match self.filter {
            None => true,
            Some(f) => section.contains(f),
        }
    }

    fn push(&mut self, section: &'static str, name: &str, expected: &str, got: &str) {
        self.report.checks.push(Check {
            section,
            name: name.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass: expected == got,
        });
    }

    fn check_bool(&mut self, section: &'static str, name: &str, expected: bool, got: bool) {
        self.push(section, name, &expected.to_string(), &got.to_string());
    }

    fn check_count(&mut self, section: &'static str, name: &str, expected: usize, got: usize) {
        self.push(section, name, &expected.to_string(), &got.to_string());
    }
}

fn sch(text: &str) -> Schema {
    parse_schema(text).unwrap()
}

fn form(text: &str) -> Formula {
    parse_formula(text).unwrap()
}

fn sound(system: &str, logic: &MatrixLogic) -> (bool, String) {
    let sys = hilbert::system(system).unwrap();
    let report = hilbert::soundness_report(&sys, logic).unwrap();
    let unsound = report.unsound_rules().join(",");
    (report.sound(), unsound)
}

fn rule_ok(logic: &MatrixLogic, premises: &[&str], conclusion: &str) -> bool {
    let prems: Vec<Schema> = premises.iter().map(|p| sch(p)).collect();
    rule_sound(logic, &prems, &sch(conclusion)).unwrap()
}

/// Run the suite. `filter` restricts to sections containing the string
/// (e.g. "3.53" or "2.4").
pub fn verify_paper(filter: Option<&str>) -> SuiteReport {
    let mut s = Suite { filter, report: SuiteReport::default() };

    if s.wants("2.4") {
        pac_profile(&mut s);
    }
    if s.wants("3.1") {
        deduction_round_trip(&mut s);
    }
    if s.wants("3.3") {
        min9_independence(&mut s);
    }
    if s.wants("3.13") {
        reductio_vs_gentle_explosion(&mut s);
    }
    if s.wants("3.15") || s.wants("3.30") || s.wants("3.69") {
        sette_p1(&mut s);
    }
    if s.wants("3.16") {
        contradiction_consistency_converses(&mut s);
    }
    if s.wants("3.21") || s.wants("3.57") {
        commutation_asymmetries(&mut s);
    }
    if s.wants("3.23") || s.wants("3.24") || s.wants("3.25") || s.wants("3.27") || s.wants("3.28")
    {
        incons_axiom_countermodels(&mut s);
    }
    if s.wants("3.29") || s.wants("3.70") || s.wants("3.18") {
        lfi1_facts(&mut s);
    }
    if s.wants("3.42") {
        strong_negation_not_classical(&mut s);
    }
    if s.wants("3.50") {
        provably_consistent_boundary(&mut s);
    }
    if s.wants("3.53") {
        urbas_fragment(&mut s);
    }
    if s.wants("3.58") {
        global_rule_still_no_replacement(&mut s);
    }
    if s.wants("3.59") || s.wants("3.69") {
        other_three_valued_axiomatizations(&mut s);
    }
    if s.wants("3.46") || s.wants("3.47") {
        t1_conservativity(&mut s);
    }
    if s.wants("3.61") || s.wants("3.62") {
        t2_and_guarded_schemes(&mut s);
    }
    if s.wants("3.11") || s.wants("3.72") || s.wants("3.73") || s.wants("3.76") {
        family_census(&mut s);
    }
    if s.wants("3.75") || s.wants("3.77") || s.wants("3.78") {
        definability_results(&mut s);
    }
    if s.wants("3.80") || s.wants("3.82") || s.wants("3.83") || s.wants("3.12") {
        algebraizability(&mut s);
    }
    if s.wants("4") {
        mortensen_axioms_in_p2(&mut s);
    }
    s.report
}

fn pac_profile(s: &mut Suite) {
    let pac = builtin("pac").unwrap();
    let (ok, bad) = sound("cmin", &pac);
    s.push("2.4", "pac validates cmin (all axioms + MP)", "sound", if ok { "sound" } else { &bad });
    s.check_bool("2.4", "pac invalidates A -> (~A -> B)", false, is_valid(&pac, &sch("A -> (~A -> B)")).unwrap());
    s.check_bool(
        "2.4",
        "pac: p, ~p do not entail q",
        false,
        entails(&pac, &[form("p"), form("~p")], &form("q")).unwrap(),
    );
    let profile = classify_explosion(&pac, 6).unwrap();
    s.check_bool("2.4", "pac paraconsistent", true, profile.paraconsistent);
    s.check_bool("2.4", "pac has no bottom particle", true, profile.bottom.is_none());
    s.check_bool("2.4", "pac has no strong negation", true, profile.strong_negation.is_none());
    s.check_bool("2.4", "pac not gently explosive", true, profile.gentle.is_none());
    s.check_bool(
        "2.4",
        "pac partial explosion: only top particles qualify",
        true,
        matches!(profile.partial, PartialExplosion::OnlyTopParticles),
    );
    let clone = matrices::clone_functions(&pac, 1, &pac.connectives()).unwrap();
    let half = pac.value_of_label("1/2").unwrap();
    s.check_bool(
        "2.4",
        "every unary pac clone member fixes 1/2",
        true,
        clone.functions.iter().all(|f| f.table[half as usize] == half),
    );
    s.check_bool("2.4", "profile witnesses re-verify", true, matrices::verify_profile(&pac, &profile).unwrap());
}

fn deduction_round_trip(s: &mut Suite) {
    let sys = hilbert::system("bc").unwrap();
    // identity case
    let a = form("p");
    let proof = hilbert::Proof {
        steps: vec![hilbert::ProofStep { formula: a.clone(), just: hilbert::Justification::Premise }],
    };
    let out = hilbert::deduction_transform(&sys, &proof, &a).unwrap();
    s.check_bool(
        "3.1",
        "deduction transform: identity case re-checks",
        true,
        hilbert::check_proof(&sys, &out).is_ok() && out.conclusion() == Some(&form("p -> p")),
    );
    // premise-rule case through bc1
    let mut subst = crate::formula::Substitution::new();
    subst.insert("A".into(), form("p"));
    subst.insert("B".into(), form("q"));
    let proof = hilbert::Proof {
        steps: vec![
            hilbert::ProofStep { formula: form("o p"), just: hilbert::Justification::Premise },
            hilbert::ProofStep { formula: form("p"), just: hilbert::Justification::Premise },
            hilbert::ProofStep { formula: form("~p"), just: hilbert::Justification::Premise },
            hilbert::ProofStep {
                formula: form("q"),
                just: hilbert::Justification::Rule {
                    name: "bc1".into(),
                    subst,
                    from: vec![1, 2, 3],
                },
            },
        ],
    };
    let out = hilbert::deduction_transform(&sys, &proof, &form("p")).unwrap();
    s.check_bool(
        "3.1",
        "deduction transform: axiomatic-rule case re-checks",
        true,
        hilbert::check_proof(&sys, &out).is_ok() && out.conclusion() == Some(&form("p -> q")),
    );
}

fn min9_independence(s: &mut Suite) {
    let m = builtin("thm3.3").unwrap();
    let report = hilbert::soundness_report(&hilbert::system("cmin").unwrap(), &m).unwrap();
    let unsound = report.unsound_rules().join(",");
    s.push("3.3", "thm3.3 matrix: exactly Min9 fails among cmin rules", "Min9", &unsound);
}

fn reductio_vs_gentle_explosion(s: &mut Suite) {
    // classical binary tables with negation and consistency both constant 1
    let m = MatrixLogic::new(
        "const-one-neg",
        &["1", "0"],
        &["1"],
        vec![0, 0],
        vec![0, 1, 1, 1],
        vec![0, 0, 0, 1],
        vec![0, 1, 0, 0],
        Some(vec![0, 0]),
        None,
    )
    .unwrap();
    let (pi_ok, bad) = sound("pi", &m);
    s.push("3.13", "const-one matrix validates pi", "sound", if pi_ok { "sound" } else { &bad });
    s.check_bool(
        "3.13",
        "const-one matrix validates RA0",
        true,
        rule_ok(&m, &["o B", "A -> B", "A -> ~B"], "~A"),
    );
    s.check_bool(
        "3.13",
        "const-one matrix invalidates bc1",
        false,
        rule_ok(&m, &["o A", "A", "~A"], "B"),
    );
}

fn sette_p1(s: &mut Suite) {
    let p1 = builtin("p1").unwrap();
    for schema in ["~(A & ~A)", "~(~A & A)", "A -> ~~A"] {
        s.check_bool(
            "3.15",
            &format!("p1 invalidates {schema}"),
            false,
            is_valid(&p1, &sch(schema)).unwrap(),
        );
    }
    let (ok, bad) = sound("bc", &p1);
    s.push("3.15", "p1 validates bc", "sound", if ok { "sound" } else { &bad });
    let (ok, bad) = sound("civw", &p1);
    s.push("3.69", "p1 validates civw", "sound", if ok { "sound" } else { &bad });
}

fn contradiction_consistency_converses(s: &mut Suite) {
    let m = builtin("fact3.16neg").unwrap();
    let (ok, bad) = sound("bc", &m);
    s.push("3.16", "fact3.16 matrix validates bc", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.16", "rule A,~A / ~o A sound", true, rule_ok(&m, &["A", "~A"], "~o A"));
    s.check_bool("3.16", "rule A & ~A / ~o A sound", true, rule_ok(&m, &["A & ~A"], "~o A"));
    s.check_bool("3.16", "rule o A / ~(A & ~A) sound", true, rule_ok(&m, &["o A"], "~(A & ~A)"));
    s.check_bool("3.16", "rule o A / ~(~A & A) sound", true, rule_ok(&m, &["o A"], "~(~A & A)"));
    s.check_bool("3.16", "converse ~o A / A & ~A unsound", false, rule_ok(&m, &["~o A"], "A & ~A"));
    s.check_bool("3.16", "converse ~(A & ~A) / o A unsound", false, rule_ok(&m, &["~(A & ~A)"], "o A"));
    s.check_bool("3.16", "converse ~(~A & A) / o A unsound", false, rule_ok(&m, &["~(~A & A)"], "o A"));
    // The closing-section remark: the same matrices validate the two
    // suggested patches while still falling short of the inconsistency-
    // to-contradiction rules.
    s.check_bool("4", "fact3.16 matrix: o A, ~o A / B sound", true, rule_ok(&m, &["o A", "~o A"], "B"));
    s.check_bool("4", "fact3.16 matrix: o o A valid", true, is_valid(&m, &sch("o o A")).unwrap());
    s.check_bool("4", "fact3.16 matrix: *A / ~A unsound", false, rule_ok(&m, &["*A"], "~A"));
    s.check_bool("4", "fact3.16 matrix: *A / A & ~A unsound", false, rule_ok(&m, &["*A"], "A & ~A"));
}

fn commutation_asymmetries(s: &mut Suite) {
    let m = builtin("thm3.21").unwrap();
    let (ok, bad) = sound("bc", &m);
    s.push("3.21", "thm3.21 matrix validates bc", "sound", if ok { "sound" } else { &bad });
    s.check_bool(
        "3.21",
        "~(A & B) / ~(B & A) unsound",
        false,
        rule_ok(&m, &["~(A & B)"], "~(B & A)"),
    );
    s.check_bool(
        "3.21",
        "~(A | B) / ~(B | A) unsound",
        false,
        rule_ok(&m, &["~(A | B)"], "~(B | A)"),
    );
    s.check_bool("3.57", "thm3.21 matrix validates ~(~A & A)", true, is_valid(&m, &sch("~(~A & A)")).unwrap());
    s.check_bool("3.57", "thm3.21 matrix invalidates ~(A & ~A)", false, is_valid(&m, &sch("~(A & ~A)")).unwrap());
}

fn incons_axiom_countermodels(s: &mut Suite) {
    let m23 = builtin("thm3.23").unwrap();
    let (ok, bad) = sound("bc", &m23);
    s.push("3.23", "thm3.23 matrix validates bc", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.23", "thm3.23 matrix validates bc2", true, rule_ok(&m23, &["~*A"], "o A"));
    s.check_bool("3.23", "thm3.23 matrix invalidates bc3", false, rule_ok(&m23, &["~o A"], "*A"));

    let m24 = builtin("thm3.24").unwrap();
    let (ok, bad) = sound("bbc", &m24);
    s.push("3.24", "thm3.24 matrix validates bbc", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.24", "thm3.24 matrix invalidates bc4", false, rule_ok(&m24, &["*A"], "~o A"));
    s.check_bool("3.24", "thm3.24 matrix invalidates bc5", false, rule_ok(&m24, &["o A"], "~*A"));

    // The four-valued tables are transcribed exactly as printed. As
    // printed they do not deliver the advertised independence: the
    // consistency column designates the middle values, which already
    // breaks bc1. The suite records the literal outcome.
    let m25a = builtin("thm3.25a").unwrap();
    let (ok, bad) = sound("bbc", &m25a);
    s.push(
        "3.25",
        "thm3.25(i) matrix validates bbc (as printed; see notes)",
        "sound",
        if ok { "sound" } else { &bad },
    );
    s.check_bool("3.25", "thm3.25(i) matrix validates bc5 (as printed)", true, rule_ok(&m25a, &["o A"], "~*A"));
    s.check_bool("3.25", "thm3.25(i) matrix invalidates bc4 (as printed)", false, rule_ok(&m25a, &["*A"], "~o A"));
    let m25b = builtin("thm3.25b").unwrap();
    let (ok, bad) = sound("bbc", &m25b);
    s.push(
        "3.25",
        "thm3.25(ii) matrix validates bbc (as printed; see notes)",
        "sound",
        if ok { "sound" } else { &bad },
    );
    s.check_bool("3.25", "thm3.25(ii) matrix validates bc4 (as printed)", true, rule_ok(&m25b, &["*A"], "~o A"));
    s.check_bool("3.25", "thm3.25(ii) matrix invalidates bc5 (as printed)", false, rule_ok(&m25b, &["o A"], "~*A"));
    // With the negation column repaired to annihilate the designated
    // non-classical values (1 -> 0, 2/3 -> 0, 1/3 -> 2/3, 0 -> 1), the
    // printed consistency columns do deliver both halves of the theorem.
    let repaired_a = repaired_thm3_25(&m25a);
    let repaired_b = repaired_thm3_25(&m25b);
    let (ok_a, bad_a) = sound_logic("bbc", &repaired_a);
    s.push("3.25", "repaired-negation variant (i) validates bbc", "sound", if ok_a { "sound" } else { &bad_a });
    s.check_bool("3.25", "repaired variant (i): bc5 sound, bc4 unsound", true,
        rule_ok(&repaired_a, &["o A"], "~*A") && !rule_ok(&repaired_a, &["*A"], "~o A"));
    let (ok_b, bad_b) = sound_logic("bbc", &repaired_b);
    s.push("3.25", "repaired-negation variant (ii) validates bbc", "sound", if ok_b { "sound" } else { &bad_b });
    s.check_bool("3.25", "repaired variant (ii): bc4 sound, bc5 unsound", true,
        rule_ok(&repaired_b, &["*A"], "~o A") && !rule_ok(&repaired_b, &["o A"], "~*A"));

    let m27 = builtin("thm3.27").unwrap();
    let (ok, bad) = sound("bbbc", &m27);
    s.push("3.27", "thm3.27 matrix validates bbbc", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.27", "thm3.27 matrix invalidates o A -> ~~o A", false, is_valid(&m27, &sch("o A -> ~~o A")).unwrap());
    s.check_bool("3.27", "thm3.27 matrix invalidates *A -> ~~*A", false, is_valid(&m27, &sch("*A -> ~~*A")).unwrap());

    let m28 = builtin("thm3.28").unwrap();
    let (ok, bad) = sound("bbbc", &m28);
    s.push("3.28", "thm3.28 matrix validates bbbc", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.28", "thm3.28 matrix validates o A -> ~~o A", true, is_valid(&m28, &sch("o A -> ~~o A")).unwrap());
    s.check_bool("3.28", "thm3.28 matrix validates *A -> ~~*A", true, is_valid(&m28, &sch("*A -> ~~*A")).unwrap());
    s.check_bool("3.28", "thm3.28 matrix invalidates A -> ~~A", false, is_valid(&m28, &sch("A -> ~~A")).unwrap());
}

fn sound_logic(system: &str, logic: &MatrixLogic) -> (bool, String) {
    let sys = hilbert::system(system).unwrap();
    let report = hilbert::soundness_report(&sys, logic).unwrap();
    (report.sound(), report.unsound_rules().join(","))
}

fn repaired_thm3_25(printed: &MatrixLogic) -> MatrixLogic {
    use crate::matrices::Conn;
    MatrixLogic::new(
        &format!("{}-repaired", printed.name()),
        &["1", "2/3", "1/3", "0"],
        &["1", "2/3", "1/3"],
        vec![3, 3, 1, 0],
        printed.binary_table(Conn::And).unwrap().to_vec(),
        printed.binary_table(Conn::Or).unwrap().to_vec(),
        printed.binary_table(Conn::Imp).unwrap().to_vec(),
        printed.unary_table(Conn::Cons).map(|t| t.to_vec()),
        printed.unary_table(Conn::Incons).map(|t| t.to_vec()),
    )
    .unwrap()
}

fn lfi1_facts(s: &mut Suite) {
    let lfi1 = builtin("lfi1").unwrap();
    let (ok, bad) = sound("ci", &lfi1);
    s.push("3.29", "lfi1 validates ci", "sound", if ok { "sound" } else { &bad });
    let (ok, bad) = sound("cije", &lfi1);
    s.push("3.69", "lfi1 validates cije", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.29", "lfi1 validates ~(A & ~A)", true, is_valid(&lfi1, &sch("~(A & ~A)")).unwrap());
    s.check_bool("3.29", "lfi1 invalidates A -> (~A -> B)", false, is_valid(&lfi1, &sch("A -> (~A -> B)")).unwrap());
    s.check_bool(
        "3.29",
        "lfi1 invalidates the converses ~(A & ~A) / o A and ~(~A & A) / o A",
        true,
        !rule_ok(&lfi1, &["~(A & ~A)"], "o A") && !rule_ok(&lfi1, &["~(~A & A)"], "o A"),
    );

    // Interdefinability rule lists for the five three-valued logics.
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
    let lfi1_holds = ["i", "iii", "iv", "v", "vii", "viii", "ix", "x", "xi", "xii"];
    for (tag, prem, concl) in &rules {
        let expected = lfi1_holds.contains(tag);
        s.check_bool(
            "3.70",
            &format!("lfi1 interdefinability rule ({tag})"),
            expected,
            rule_ok(&lfi1, &[prem], concl),
        );
    }
    let p_holds = ["i", "iv", "vi", "vii", "ix", "xi"];
    for key in ["p1", "p2", "p3", "lfi2"] {
        let logic = builtin(key).unwrap();
        for (tag, prem, concl) in &rules {
            let expected = p_holds.contains(tag);
            s.check_bool(
                "3.70",
                &format!("{key} interdefinability rule ({tag})"),
                expected,
                rule_ok(&logic, &[prem], concl),
            );
        }
    }
    // The quoted list includes (iv) for p3, but p3's printed disjunction
    // sends (1/2, 1/2) to 1/2 while its negation sends 1/2 to 1, so
    // ~(A | B) is designated at that point and ~(~A -> B) is not. The
    // failing line above is annotated here with the countermodel.
    s.push(
        "3.70",
        "p3 rule (iv) countermodel (quoted list disagrees)",
        "A=1/2, B=1/2",
        &{
            let p3 = builtin("p3").unwrap();
            crate::matrices::rule_countermodel(
                &p3,
                &[sch("~(A | B)")],
                &sch("~(~A -> B)"),
            )
            .unwrap()
            .map(|asg| {
                asg.iter()
                    .map(|(m, v)| format!("{m}={}", p3.label(*v)))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .unwrap_or_else(|| "sound".into())
        },
    );
    s.check_bool("3.70", "lfi2 validates ~(A & ~A)", true, is_valid(&builtin("lfi2").unwrap(), &sch("~(A & ~A)")).unwrap());
    s.check_bool(
        "3.70",
        "(A & ~A) / ~~(A & ~A) sound in p2, lfi1, lfi2",
        true,
        ["p2", "lfi1", "lfi2"]
            .iter()
            .all(|k| rule_ok(&builtin(k).unwrap(), &["A & ~A"], "~~(A & ~A)")),
    );
    // Gentle explosion profile of lfi1.
    let profile = classify_explosion(&lfi1, 6).unwrap();
    s.check_bool("2.4", "lfi1 has a bottom particle", true, profile.bottom.is_some());
    s.check_bool("2.4", "lfi1 has a strong negation", true, profile.strong_negation.is_some());
    s.check_bool("2.4", "lfi1 gently explosive", true, profile.gentle.is_some());
    s.check_bool("2.4", "lfi1 witnesses re-verify", true, matrices::verify_profile(&lfi1, &profile).unwrap());
}

fn strong_negation_not_classical(s: &mut Suite) {
    let m = builtin("thm3.42").unwrap();
    let (ok, bad) = sound("bbbc", &m);
    s.push("3.42", "swapped-constants matrix validates bbbc", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.42", "ci rule fails", false, rule_ok(&m, &["*A"], "A & ~A"));
    s.check_bool("3.42", "ext fails", false, is_valid(&m, &sch("o A")).unwrap());
    s.check_bool("3.42", "A | -A invalid", false, is_valid(&m, &sch("A | -A")).unwrap());
    s.check_bool("3.42", "A -> --A invalid", false, is_valid(&m, &sch("A -> --A")).unwrap());
}

fn provably_consistent_boundary(s: &mut Suite) {
    let m = builtin("fact3.50").unwrap();
    let (ok, bad) = sound("ci", &m);
    s.push("3.50", "fact3.50 matrix validates ci", "sound", if ok { "sound" } else { &bad });
    s.check_bool(
        "3.50",
        "fact3.50 matrix invalidates o -A (canonical strong negation)",
        false,
        is_valid(&m, &sch("o (~A & o A)")).unwrap(),
    );
}

fn urbas_fragment(s: &mut Suite) {
    let u = builtin("thm3.53urbas").unwrap();
    let (ok, bad) = sound("bc", &u);
    s.push("3.53", "urbas 8-valued matrix validates bc", "sound", if ok { "sound" } else { &bad });
    // The matrix-level reading of EC quantifies over all pairs of terms
    // with equal designation patterns. That is strictly stronger than
    // closure under EC for derivably equivalent formulas: here `A & B`
    // and `A & ~~B` are designation-equal (both designated only at 1, 1),
    // yet not interderivable, and their negations separate. The check
    // reports the violation; EO is immune because `o` is constantly 0.
    let ec = hilbert::metarule_sound_bounded(&u, MetaRule::Ec, 5).unwrap();
    s.check_bool("3.53", "urbas: EC has no violation at bound 5", true, ec.ok());
    if let hilbert::MetaVerdict::Violation { premise_term, conclusion_term } = &ec {
        s.push(
            "3.53",
            "urbas: the EC violation is the double-negation pair",
            "A & B / A & ~~B",
            &format!("{premise_term} / {conclusion_term}"),
        );
    }
    let eo = hilbert::metarule_sound_bounded(&u, MetaRule::Eo, 5).unwrap();
    s.check_bool("3.53", "urbas: EO has no violation at bound 5", true, eo.ok());
    s.check_bool("3.53", "urbas invalidates A -> (~A -> B)", false, is_valid(&u, &sch("A -> (~A -> B)")).unwrap());
    s.check_bool("3.53", "urbas invalidates ~(A & ~A)", false, is_valid(&u, &sch("~(A & ~A)")).unwrap());
}

fn global_rule_still_no_replacement(s: &mut Suite) {
    let m = builtin("thm3.58").unwrap();
    let (ok, bad) = sound("cib", &m);
    s.push("3.58", "thm3.58 matrix validates cib", "sound", if ok { "sound" } else { &bad });
    // The single-valuation rule form of cg fails in this matrix at
    // B = 1/2, A = 1/2 (the biconditional premise is designated there
    // but the negated conclusion is not); only the deduction-rule form
    // RG survives. Both outcomes are recorded.
    s.check_bool(
        "3.58",
        "thm3.58 matrix validates cg",
        true,
        rule_ok(&m, &["B <-> (A & ~A)"], "~B <-> ~(A & ~A)"),
    );
    s.push(
        "3.58",
        "cg countermodel in thm3.58 (rule form fails; see RG below)",
        "A=1/2, B=1/2",
        &crate::matrices::rule_countermodel(
            &m,
            &[sch("B <-> (A & ~A)")],
            &sch("~B <-> ~(A & ~A)"),
        )
        .unwrap()
        .map(|asg| {
            asg.iter().map(|(mv, v)| format!("{mv}={}", m.label(*v))).collect::<Vec<_>>().join(", ")
        })
        .unwrap_or_else(|| "sound".into()),
    );
    let rg = hilbert::metarule_sound_bounded(&m, MetaRule::Rg, 4).unwrap();
    s.check_bool("3.58", "thm3.58 matrix: RG has no violation at bound 4", true, rg.ok());
    s.check_bool(
        "3.58",
        "~(A | B) / ~(B | A) unsound",
        false,
        rule_ok(&m, &["~(A | B)"], "~(B | A)"),
    );
}

fn other_three_valued_axiomatizations(s: &mut Suite) {
    let p2 = builtin("p2").unwrap();
    let (ok, bad) = sound("cive", &p2);
    s.push("3.59", "p2 validates cive", "sound", if ok { "sound" } else { &bad });
    s.check_bool("3.59", "p2 invalidates A -> (~A -> B)", false, is_valid(&p2, &sch("A -> (~A -> B)")).unwrap());
    let p3 = builtin("p3").unwrap();
    let (ok, bad) = sound("ciorw", &p3);
    s.push("3.69", "p3 validates ciorw", "sound", if ok { "sound" } else { &bad });
    let lfi2 = builtin("lfi2").unwrap();
    let (ok, bad) = sound("ciore", &lfi2);
    s.push("3.69", "lfi2 validates ciore", "sound", if ok { "sound" } else { &bad });
}

fn t1_conservativity(s: &mut Suite) {
    let cpl = builtin("cpl").unwrap();
    for target in ["lfi1", "p1"] {
        let tgt = builtin(target).unwrap();
        let report = translate::conservativity_check(Translation::T1, &cpl, &tgt, 2, 5).unwrap();
        s.check_bool(
            "3.46",
            &format!("t1 conservative into {target} (2 atoms, size 5)"),
            true,
            report.holds(),
        );
    }
    let ecpl = builtin("ecpl").unwrap();
    let lfi1 = builtin("lfi1").unwrap();
    let report = translate::conservativity_check(Translation::T1e, &ecpl, &lfi1, 2, 5).unwrap();
    s.check_bool("3.47", "t1e conservative into lfi1 (2 atoms, size 5)", true, report.holds());
}

fn t2_and_guarded_schemes(s: &mut Suite) {
    let lfi1 = builtin("lfi1").unwrap();
    let guarded = translate::guarded_classical_check(&lfi1, 2, 4).unwrap();
    s.check_bool(
        "3.61",
        "atom-consistency premises recover classical entailment in lfi1 (2 atoms, size 4)",
        true,
        guarded.holds(),
    );
    // Both printed readings of the atom clause are checked; the oracle
    // verdicts are recorded rather than assumed.
    let cpl = builtin("cpl").unwrap();
    for t in [Translation::T2Cons, Translation::T2Conj] {
        let report = translate::conservativity_check(t, &cpl, &lfi1, 2, 4).unwrap();
        s.push(
            "3.62",
            &format!("{} conservative into lfi1 (2 atoms, size 4)", t.name()),
            "no violation",
            if report.holds() { "no violation" } else { "violation" },
        );
    }
}

fn family_census(s: &mut Suite) {
    let census = eightk::census();
    s.check_count("3.11", "family size", 8192, census.total);
    s.check_count("3.73", "defined-consistency members (quoted: 7,680)", 7680, census.dc_systems);
    s.check_count(
        "3.73",
        "members defining o A as ~(A & ~A) (quoted: 4,096)",
        4096,
        census.neg_conj_defines_cons,
    );
    // The two counts below are quoted without proof in the source; the
    // census is the oracle and currently disagrees. The co-group axioms
    // pin nine of the thirteen free cells, which forces 2^4 = 16 members;
    // see the repository notes.
    s.check_count("3.73", "members extending cio (quoted: 1,680)", 1680, census.extend_cio);
    s.check_count(
        "3.73",
        "cio-extending members defining o A as ~(A & ~A) (quoted: 980)",
        980,
        census.extend_cilo,
    );
    s.check_count("3.73", "members extending cia", 8192, census.extend_cia);
    // containments that hold by definition, re-checked on the bitmaps
    let unhex = |s: &str| -> Vec<u8> {
        (0..s.len() / 2).map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).unwrap()).collect()
    };
    let dc = unhex(&census.bitmaps["dc_systems"]);
    let nc = unhex(&census.bitmaps["neg_conj_defines_cons"]);
    let cio = unhex(&census.bitmaps["extend_cio"]);
    let cilo = unhex(&census.bitmaps["extend_cilo"]);
    let contained = |a: &[u8], b: &[u8]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    s.check_bool("3.73", "the ~(A & ~A) class within the defined-consistency class", true, contained(&nc, &dc));
    s.check_bool("3.73", "the cilo class within the cio class", true, contained(&cilo, &cio));
    s.check_count("3.11", "members invalidating A -> (~A -> B)", 8192, census.tps_invalid);
    s.check_count("3.76", "members validating o -A", 8192, census.cons_strong_neg_valid);
    let cert = eightk::separation_certificate();
    s.check_bool("3.72", "cell-probe validity vectors equal code bits", true, cert.probe_vectors_ok);
    s.check_count("3.72", "pairs separated", 8192 * 8191 / 2, cert.pairs_separated as usize);
    s.check_bool("3.72", "largest separator within search bound 7", true, cert.max_separator_size <= 7);
    // Spot-check the search itself on a deterministic sample.
    let mut sampled_ok = true;
    for (a, b) in [(0u32, 8191u32), (1, 2), (4096, 4097), (5168, 8191), (333, 4444)] {
        let sep = eightk::separating_formula(
            EightKCode::new(a).unwrap(),
            EightKCode::new(b).unwrap(),
            7,
        );
        match sep {
            Ok(found) => {
                let l1 = eightk::build_logic(EightKCode::new(a).unwrap());
                let l2 = eightk::build_logic(EightKCode::new(b).unwrap());
                let v1 = is_valid(&l1, &found.schema).unwrap();
                let v2 = is_valid(&l2, &found.schema).unwrap();
                sampled_ok &= v1 != v2;
            }
            Err(_) => sampled_ok = false,
        }
    }
    s.check_bool("3.72", "breadth-first separation succeeds on sampled pairs", true, sampled_ok);
}

fn definability_results(s: &mut Suite) {
    // congruence connective on three sample codes
    let e = sch("(A <-> B) & (o A <-> o B)");
    let mut all = true;
    for code in [0u32, 5168, 8191] {
        let logic = eightk::build_logic(EightKCode::new(code).unwrap());
        all &= algebra::congruence_connective_check(&logic, &e).unwrap();
    }
    s.check_bool("3.75", "equivalence connective is a congruence on sample codes", true, all);
    let sn = eightk::strong_negation_table(EightKCode::new(0).unwrap()).unwrap();
    s.push(
        "3.75",
        "strong negation table (images of 1, 1/2, 0)",
        "0,0,1",
        &sn.table.iter().map(|&v| {
            eightk::build_logic(EightKCode::new(0).unwrap()).label(v).to_string()
        }).collect::<Vec<_>>().join(","),
    );

    // Embedding of the all-ones member into a 64-code sample.
    let p1 = builtin("p1").unwrap();
    let sample: Vec<u32> = (0..64u32).map(|i| i * 128 + i % 97).collect();
    let embedded = sample
        .par_iter()
        .all(|&code| {
            let target = eightk::build_logic(EightKCode::new(code % 8192).unwrap());
            translate::conservativity_check(Translation::P1Embed, &p1, &target, 2, 4)
                .unwrap()
                .holds()
        });
    s.check_bool("3.78", "p1embed conservative into 64 sampled codes (2 atoms, size 4)", true, embedded);

    // Hyperclassical synthesis over the whole family.
    let failures: usize = EightKCode::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&code| {
            let logic = eightk::build_logic(code);
            let mut bad = 0usize;
            let neg: [u8; 3] =
                std::array::from_fn(|x| logic.neg_value(x as u8));
            if translate::define_hyperclassical(&HyperTable::Unary(neg)).is_err() {
                bad += 1;
            }
            for conn in [crate::matrices::Conn::And, crate::matrices::Conn::Or, crate::matrices::Conn::Imp] {
                let table: [u8; 9] = std::array::from_fn(|i| {
                    logic.apply_binary(conn, (i / 3) as u8, (i % 3) as u8).unwrap()
                });
                if translate::define_hyperclassical(&HyperTable::Binary(table)).is_err() {
                    bad += 1;
                }
            }
            bad
        })
        .sum();
    s.check_count("3.77", "hyperclassical synthesis failures over all 4 x 8192 tables", 0, failures);
}

fn algebraizability(s: &mut Suite) {
    let e = sch("(A <-> B) & (o A <-> o B)");
    let delta = sch("(A -> A) -> A");
    let eps = sch("A -> A");
    let results: Vec<bool> = EightKCode::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&code| {
            let logic = eightk::build_logic(code);
            algebra::blok_pigozzi_check(&logic, &e, &delta, &eps).unwrap()
        })
        .collect();
    let passing = results.iter().filter(|&&b| b).count();
    // Quoted for all 8,192; the printed delta/epsilon pair fails condition
    // (iii) exactly on the codes with `1/2 -> 1/2 = 1` and `1 -> 1/2 =
    // 1/2` (2,048 codes). See the repository notes; the corrected pair
    // below witnesses algebraizability for every member.
    s.check_count(
        "3.82",
        "codes passing the printed delta/epsilon pair (quoted: 8,192)",
        8192,
        passing,
    );
    let first_failing = results.iter().position(|&b| !b);
    s.push(
        "3.82",
        "first failing code under the printed pair",
        "none",
        &first_failing.map(|c| c.to_string()).unwrap_or_else(|| "none".into()),
    );
    let delta2 = sch("o A & A");
    let eps2 = sch("o A & (A | o A)");
    let all_corrected = EightKCode::all()
        .collect::<Vec<_>>()
        .par_iter()
        .all(|&code| {
            let logic = eightk::build_logic(code);
            algebra::blok_pigozzi_check(&logic, &e, &delta2, &eps2).unwrap()
        });
    s.check_bool(
        "3.82",
        "corrected pair (o A & A, o A & (A | o A)) passes every code",
        true,
        all_corrected,
    );

    // In the three-valued family the printed pair does work for the
    // catalog member (its implication has `1/2 -> 1/2 = 1/2`).
    let lfi1 = builtin("lfi1").unwrap();
    s.check_bool(
        "3.82",
        "lfi1 passes the printed pair",
        true,
        algebra::blok_pigozzi_check(&lfi1, &e, &delta, &eps).unwrap(),
    );

    let m = builtin("thm3.83mortensen").unwrap();
    let congs = algebra::enumerate_congruences(&m, true).unwrap();
    s.check_count("3.83", "mortensen 5-valued: designated-compatible congruences", 1, congs.len());
    // Bounded search for an equivalence connective: no two-metavariable
    // term of size up to 5 makes the algebraizability conditions pass.
    let candidates = crate::clone::bounded_terms(&m, 2, 5);
    let passing = candidates
        .functions
        .iter()
        .filter(|f| f.witness.metavars().len() == 2)
        .filter(|f| algebra::blok_pigozzi_check(&m, &f.witness, &delta, &eps).unwrap())
        .count();
    s.check_count("3.83", "mortensen: equivalence candidates passing up to size 5", 0, passing);
    s.check_bool("3.83", "the single congruence is the identity", true, congs[0].is_identity());
    let filters = algebra::lattice_filters(&m).unwrap();
    s.check_bool("3.83", "mortensen 5-valued: at least two lattice filters", true, filters.len() >= 2);
    let (ok, bad) = sound("cibaw", &m);
    s.push("3.83", "mortensen 5-valued validates cibaw", "sound", if ok { "sound" } else { &bad });
    let verdict = algebra::filter_congruence_comparison(&m).unwrap();
    s.check_bool(
        "3.80",
        "filter/congruence counts differ (no isomorphism possible)",
        true,
        !verdict.isomorphic_counts,
    );
}

fn mortensen_axioms_in_p2(s: &mut Suite) {
    let p2 = builtin("p2").unwrap();
    let sys = hilbert::system("c1/2").unwrap();
    for n in 1..=3u32 {
        let m1 = hilbert::mortensen_m1(n);
        s.check_bool(
            "4",
            &format!("M1.{n} sound in p2"),
            true,
            hilbert::rule_sound_in(&sys, &p2, &m1).unwrap(),
        );
        for conn in [crate::matrices::Conn::And, crate::matrices::Conn::Or, crate::matrices::Conn::Imp] {
            let m2 = hilbert::mortensen_m2(n, conn);
            s.check_bool(
                "4",
                &format!("M2.{n}.{} sound in p2", conn.symbol()),
                true,
                hilbert::rule_sound_in(&sys, &p2, &m2).unwrap(),
            );
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filtered_sections_run() {
        let report = verify_paper(Some("3.53"));
        assert!(report.checks.iter().all(|c| c.section.contains("3.53")));
        // All lines pass except the known matrix-level EC failure, which
        // the suite reports with its witness pair.
        let failures: Vec<&Check> = report.checks.iter().filter(|c| !c.pass).collect();
        assert_eq!(failures.len(), 1, "failures: {failures:?}");
        assert!(failures[0].name.contains("EC"));
        assert!(report
            .checks
            .iter()
            .any(|c| c.pass && c.name.contains("double-negation pair")));
    }

    #[test]
    fn pac_section_passes() {
        let report = verify_paper(Some("2.4"));
        assert!(report.all_pass());
        assert!(report.checks.len() >= 8);
    }

    #[test]
    fn suite_is_deterministic() {
        let a = verify_paper(Some("3.16"));
        let b = verify_paper(Some("3.16"));
        let fmt = |r: &SuiteReport| {
            r.checks.iter().map(|c| format!("{}|{}|{}|{}", c.section, c.name, c.expected, c.got)).collect::<Vec<_>>()
        };
        assert_eq!(fmt(&a), fmt(&b));
    }
}
