//! Verification harness for k-Schur transition tables.
//!
//! A table 𝒳 holds the coefficients expanding the power sums indexed by
//! k-bounded partitions of n over the k-Schur functions; the dual table is
//! pinned down by 𝒳^t * 𝒳~ = diag(z_lambda). Computing genuine tables for
//! k < n is out of scope here: they are ingested from files, while the
//! k >= n regime (where the k-Schur functions reduce to Schur functions and
//! 𝒳 is the character table) is generated directly and exercises every
//! check against the proved character-table identities.
//!
//! File format (`format_version` 1): a UTF-8 JSON object with fields
//! `format_version`, `n`, `k`, `labels` (partition strings in the canonical
//! order of k-bounded partitions) and `rows` (row-major decimal strings,
//! row i belonging to character label i).
//!
//! Checks are flagged "proved" when the statement is a theorem and
//! "observed" when the data merely exhibits it (the Smith-normal-form
//! claims for the dual table, and entry integrality of the dual, remain
//! open); an observed failure never suppresses the proved checks.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::char_tables::CharTable;
use crate::error::Error;
use crate::linalg::{IntMatrix, RatMatrix, SnfResult};
use crate::partitions::{enumerate, PartSet, Partition};
use crate::report::Report;

pub const KTABLE_FORMAT_VERSION: u32 = 1;

/// Transition table between power sums and k-Schur functions, rows and
/// columns indexed by the k-bounded partitions of n in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTable {
    pub n: u32,
    pub k: u32,
    pub labels: Vec<Partition>,
    pub values: IntMatrix,
}

/// The dual transition table, defined by 𝒳^t * 𝒳~ = diag(z_lambda).
#[derive(Clone, Debug)]
pub struct KDualTable {
    pub labels: Vec<Partition>,
    pub rational: RatMatrix,
    /// Present when every entry is an integer (expected for genuine tables,
    /// but not proved; reported, never assumed).
    pub integral: Option<IntMatrix>,
}

#[derive(Serialize, Deserialize)]
struct KTableFile {
    format_version: u32,
    n: u32,
    k: u32,
    labels: Vec<String>,
    rows: Vec<Vec<String>>,
}

/// The canonical ordered label list P^(k) for partitions of n.
pub fn k_bounded_labels(n: u32, k: u32) -> Result<Vec<Partition>, Error> {
    if k == 0 {
        return Err(Error::Precondition("k must be >= 1".into()));
    }
    Ok(enumerate(n, &PartSet::Bounded(k)))
}

impl KTable {
    pub fn load(path: &Path) -> Result<KTable, Error> {
        let text = std::fs::read_to_string(path)?;
        KTable::from_json_str(&text)
    }

    pub fn from_json_str(text: &str) -> Result<KTable, Error> {
        let doc: KTableFile =
            serde_json::from_str(text).map_err(|e| Error::KTableParse(e.to_string()))?;
        if doc.format_version != KTABLE_FORMAT_VERSION {
            return Err(Error::KTableParse(format!(
                "unsupported format_version {} (expected {})",
                doc.format_version, KTABLE_FORMAT_VERSION
            )));
        }
        let expected = k_bounded_labels(doc.n, doc.k)?;
        if doc.rows.len() != doc.labels.len()
            || doc.rows.iter().any(|r| r.len() != doc.labels.len())
        {
            return Err(Error::KTableNotSquare(format!(
                "{} labels vs {} rows",
                doc.labels.len(),
                doc.rows.len()
            )));
        }
        if doc.labels.len() != expected.len() {
            return Err(Error::KTableSize(format!(
                "{} labels, but there are {} {}-bounded partitions of {}",
                doc.labels.len(),
                expected.len(),
                doc.k,
                doc.n
            )));
        }
        let mut labels = Vec::with_capacity(doc.labels.len());
        for s in &doc.labels {
            labels.push(
                s.parse::<Partition>()
                    .map_err(|e| Error::KTableParse(e.to_string()))?,
            );
        }
        if labels != expected {
            let at = labels
                .iter()
                .zip(&expected)
                .position(|(got, want)| got != want)
                .unwrap_or(0);
            return Err(Error::KTableLabels(format!(
                "position {at}: got `{}`, expected `{}`",
                labels[at], expected[at]
            )));
        }
        let size = labels.len();
        let mut values = IntMatrix::zero(size, size);
        for (r, row) in doc.rows.iter().enumerate() {
            for (c, entry) in row.iter().enumerate() {
                values[(r, c)] = entry
                    .parse::<BigInt>()
                    .map_err(|e| Error::KTableParse(format!("entry ({r},{c}): {e}")))?;
            }
        }
        Ok(KTable {
            n: doc.n,
            k: doc.k,
            labels,
            values,
        })
    }

    pub fn to_json_string(&self) -> String {
        let doc = KTableFile {
            format_version: KTABLE_FORMAT_VERSION,
            n: self.n,
            k: self.k,
            labels: self.labels.iter().map(|l| l.to_string()).collect(),
            rows: (0..self.values.rows())
                .map(|r| self.values.row(r).iter().map(|v| v.to_string()).collect())
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
        text.push('\n');
        text
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        std::fs::write(path, self.to_json_string())?;
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn centralizer_orders(&self) -> Vec<BigInt> {
        self.labels.iter().map(|l| l.stats().z).collect()
    }
}

/// The k >= n regime: every partition of n is k-bounded and the k-Schur
/// functions reduce to Schur functions, so 𝒳 is the character table itself.
pub fn make_trivial_fixture(n: u32, k: u32) -> Result<KTable, Error> {
    if k == 0 {
        return Err(Error::Precondition("k must be >= 1".into()));
    }
    if k < n {
        return Err(Error::OutOfScope(format!(
            "k = {k} < n = {n}: genuine k-Schur tables are not computed here, only verified"
        )));
    }
    let x = CharTable::build(n)?;
    Ok(KTable {
        n,
        k,
        labels: x.labels().to_vec(),
        values: x.values().clone(),
    })
}

/// Solves 𝒳^t * 𝒳~ = diag(z) exactly. Integrality of the result is
/// reported via `integral`, not required.
pub fn dual(table: &KTable) -> Result<KDualTable, Error> {
    let delta = IntMatrix::diagonal(&table.centralizer_orders());
    // Y * 𝒳 = diag(z) gives Y = 𝒳~^t
    let yt = table.values.solve_right(&delta)?;
    let rational = yt.transpose();
    let integral = rational.to_int();
    Ok(KDualTable {
        labels: table.labels.clone(),
        rational,
        integral,
    })
}

// lambda dominates mu (both partitions of the same n)
fn dominates(lambda: &Partition, mu: &Partition) -> bool {
    let mut sl: u64 = 0;
    let mut sm: u64 = 0;
    let lp = lambda.parts();
    let mp = mu.parts();
    for i in 0..lp.len().max(mp.len()) {
        sl += u64::from(lp.get(i).copied().unwrap_or(0));
        sm += u64::from(mp.get(i).copied().unwrap_or(0));
        if sl < sm {
            return false;
        }
    }
    true
}

/// The transition and determinant statements relating 𝒳 to the character
/// table: X^(k) = T0 * 𝒳 with T0 integral lower unitriangular,
/// det 𝒳 = prod a_lambda = det X^(k), and the same determinant identity for
/// every principal submatrix cut by alpha in P^(k).
pub fn verify_thm61(table: &KTable) -> Result<Report, Error> {
    let mut report = Report::new(format!("kschur n={} k={}", table.n, table.k));
    let x = CharTable::build(table.n)?;
    // the k-bounded labels are an initial segment of the canonical order
    let size = table.size();
    let idx: Vec<usize> = (0..size).collect();
    debug_assert_eq!(&x.labels()[..size], &table.labels[..]);
    let x_k = x.values().submatrix(&idx, &idx);

    match table.values.solve_right(&x_k) {
        Ok(t0) => {
            let integral = t0.is_integral();
            let lex_lower = t0.is_lower_unitriangular() == Some(true);
            let mut witnesses = vec![("integral", integral.to_string())];
            let ok = integral && lex_lower;
            if !ok {
                // lex refines dominance on these labels, so a genuine table
                // can only fail the lex check if it also fails dominance;
                // report the weaker order separately before judging
                let dominance_ok = integral
                    && t0.to_int().map_or(false, |m| {
                        dominance_lower_unitriangular(&m, &table.labels)
                    });
                witnesses.push(("lower_unitriangular_lex", lex_lower.to_string()));
                witnesses.push(("lower_unitriangular_dominance", dominance_ok.to_string()));
            }
            report.check("transition_integral_lower_unitriangular", ok, witnesses);
        }
        Err(Error::Singular) => {
            report.check(
                "transition_integral_lower_unitriangular",
                false,
                vec![("reason", "table is singular".to_string())],
            );
        }
        Err(e) => return Err(e),
    }

    let mut prod_a = BigInt::one();
    for lambda in &table.labels {
        prod_a *= lambda.stats().a;
    }
    let det_k = table.values.det()?;
    report.check(
        "det_matches_a_product",
        det_k == prod_a,
        vec![("det", det_k.to_string()), ("expected", prod_a.to_string())],
    );
    let det_x_k = x_k.det()?;
    report.check(
        "det_matches_char_submatrix",
        det_k == det_x_k,
        vec![
            ("det", det_k.to_string()),
            ("char_submatrix", det_x_k.to_string()),
        ],
    );

    // det 𝒳_(alpha) = det X_(alpha) = prod_{lambda < alpha} a_lambda
    let mut minors_ok = true;
    let mut failing = Vec::new();
    for (v, alpha) in table.labels.iter().enumerate() {
        let top: Vec<usize> = (0..v).collect();
        let m_k = table.values.submatrix(&top, &top).det()?;
        let m_x = x_k.submatrix(&top, &top).det()?;
        let mut prod = BigInt::one();
        for lambda in &table.labels[..v] {
            prod *= lambda.stats().a;
        }
        if m_k != m_x || m_k != prod {
            minors_ok = false;
            failing.push(alpha.to_string());
        }
    }
    report.check(
        "principal_minors_match_char_table",
        minors_ok,
        if failing.is_empty() {
            vec![("cuts_checked", table.size().to_string())]
        } else {
            vec![("failing_cuts", failing.join(" "))]
        },
    );

    Ok(report)
}

fn dominance_lower_unitriangular(m: &IntMatrix, labels: &[Partition]) -> bool {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if r == c {
                if !m[(r, c)].is_one() {
                    return false;
                }
            } else if !m[(r, c)].is_zero() && !dominates(&labels[r], &labels[c]) {
                return false;
            }
        }
    }
    true
}

/// The dual-table statements: the proved determinant formula
/// det 𝒳~ = prod b_lambda, and the observed (open) Smith-normal-form
/// claims for 𝒳~ and its lower principal submatrices.
pub fn verify_observations(table: &KTable) -> Result<Report, Error> {
    let mut report = Report::new(format!("kschur-dual n={} k={}", table.n, table.k));
    let dual_table = match dual(table) {
        Ok(d) => d,
        Err(Error::Singular) => {
            report.check(
                "duality_product_exact",
                false,
                vec![("reason", "table is singular".to_string())],
            );
            report.not_applicable("det_dual_matches_b_product", "table is singular");
            report.observed_not_applicable("dual_is_integral", "table is singular");
            report.observed_not_applicable("snf_dual_matches_b_list", "table is singular");
            report.observed_not_applicable("snf_dual_submatrices_match_b_lists", "table is singular");
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    // (𝒳)^t * 𝒳~ = diag(z), exactly
    let product = table
        .values
        .to_rational()
        .transpose()
        .mul(&dual_table.rational)?;
    let expected = IntMatrix::diagonal(&table.centralizer_orders()).to_rational();
    report.check("duality_product_exact", product == expected, vec![]);

    let mut prod_b = BigInt::one();
    for lambda in &table.labels {
        prod_b *= lambda.stats().b;
    }
    let det_dual = dual_table.rational.det()?;
    report.check(
        "det_dual_matches_b_product",
        det_dual == BigRational::from(prod_b.clone()),
        vec![
            ("det", det_dual.to_string()),
            ("expected", prod_b.to_string()),
        ],
    );
    report.note("det_dual", det_dual.to_string());

    report.observed(
        "dual_is_integral",
        dual_table.integral.is_some(),
        vec![],
    );

    match &dual_table.integral {
        Some(m) => {
            let b_list: Vec<BigInt> = table.labels.iter().map(|l| l.stats().b).collect();
            let snf = m.snf();
            let expected = SnfResult::of_list(&b_list);
            report.observed(
                "snf_dual_matches_b_list",
                snf == expected,
                vec![
                    ("snf", snf.to_string()),
                    ("expected", expected.to_string()),
                ],
            );

            let mut ok = true;
            let mut failing = Vec::new();
            for (v, alpha) in table.labels.iter().enumerate() {
                let tail: Vec<usize> = (v..table.size()).collect();
                let snf = m.submatrix(&tail, &tail).snf();
                let expected = SnfResult::of_list(&b_list[v..]);
                if snf != expected {
                    ok = false;
                    failing.push(alpha.to_string());
                }
            }
            report.observed(
                "snf_dual_submatrices_match_b_lists",
                ok,
                if failing.is_empty() {
                    vec![("cuts_checked", table.size().to_string())]
                } else {
                    vec![("failing_cuts", failing.join(" "))]
                },
            );
        }
        None => {
            report.observed_not_applicable("snf_dual_matches_b_list", "dual table not integral");
            report.observed_not_applicable(
                "snf_dual_submatrices_match_b_lists",
                "dual table not integral",
            );
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;

    #[test]
    fn trivial_fixture_equals_char_table() {
        for (n, k) in [(4, 4), (4, 7), (1, 1), (5, 5)] {
            let fixture = make_trivial_fixture(n, k).unwrap();
            let x = CharTable::build(n).unwrap();
            assert_eq!(fixture.values, *x.values(), "n={n} k={k}");
            assert_eq!(fixture.labels, x.labels());
        }
    }

    #[test]
    fn fixture_rejects_genuine_regime() {
        assert!(matches!(
            make_trivial_fixture(5, 3),
            Err(Error::OutOfScope(_))
        ));
        assert!(make_trivial_fixture(3, 0).is_err());
    }

    #[test]
    fn json_round_trip_is_exact() {
        let fixture = make_trivial_fixture(4, 4).unwrap();
        let text = fixture.to_json_string();
        let loaded = KTable::from_json_str(&text).unwrap();
        assert_eq!(loaded, fixture);
        assert_eq!(loaded.to_json_string(), text);
    }

    #[test]
    fn load_diagnostics_are_distinct() {
        let fixture = make_trivial_fixture(3, 3).unwrap();
        let good = fixture.to_json_string();

        assert!(matches!(
            KTable::from_json_str("not json"),
            Err(Error::KTableParse(_))
        ));
        let bad_version = good.replace("\"format_version\": 1", "\"format_version\": 9");
        assert!(matches!(
            KTable::from_json_str(&bad_version),
            Err(Error::KTableParse(_))
        ));
        // shuffled labels
        let doc: serde_json::Value = serde_json::from_str(&good).unwrap();
        let mut shuffled = doc.clone();
        shuffled["labels"].as_array_mut().unwrap().swap(0, 2);
        assert!(matches!(
            KTable::from_json_str(&shuffled.to_string()),
            Err(Error::KTableLabels(_))
        ));
        // drop one row: not square
        let mut short = doc.clone();
        short["rows"].as_array_mut().unwrap().pop();
        assert!(matches!(
            KTable::from_json_str(&short.to_string()),
            Err(Error::KTableNotSquare(_))
        ));
        // wrong k for the label count
        let mut wrong_k = doc;
        wrong_k["k"] = serde_json::Value::from(2);
        assert!(matches!(
            KTable::from_json_str(&wrong_k.to_string()),
            Err(Error::KTableSize(_))
        ));
    }

    #[test]
    fn perturbed_entry_loads_but_fails_verification() {
        let mut fixture = make_trivial_fixture(4, 4).unwrap();
        fixture.values[(2, 3)] += BigInt::one();
        let loaded = KTable::from_json_str(&fixture.to_json_string()).unwrap();
        let report = verify_thm61(&loaded).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn dual_of_trivial_fixture_is_the_table_itself() {
        let fixture = make_trivial_fixture(5, 5).unwrap();
        let d = dual(&fixture).unwrap();
        assert_eq!(d.integral.as_ref(), Some(&fixture.values));
    }

    #[test]
    fn dual_one_by_one() {
        let fixture = make_trivial_fixture(1, 1).unwrap();
        let d = dual(&fixture).unwrap();
        assert_eq!(d.integral.unwrap(), IntMatrix::identity(1));
    }

    #[test]
    fn dual_round_trip_reproduces_diagonal() {
        for (n, k) in [(4, 4), (5, 5), (6, 8)] {
            let fixture = make_trivial_fixture(n, k).unwrap();
            let d = dual(&fixture).unwrap();
            let product = fixture
                .values
                .to_rational()
                .transpose()
                .mul(&d.rational)
                .unwrap();
            let expected = IntMatrix::diagonal(&fixture.centralizer_orders()).to_rational();
            assert_eq!(product, expected, "n={n} k={k}");
        }
    }

    #[test]
    fn thm61_on_trivial_fixtures() {
        for n in 0..=6u32 {
            let fixture = make_trivial_fixture(n, n.max(1)).unwrap();
            let report = verify_thm61(&fixture).unwrap();
            assert!(report.passed(), "n={n}: {report:?}");
        }
    }

    #[test]
    fn observations_on_trivial_fixtures() {
        let fixture = make_trivial_fixture(5, 5).unwrap();
        let report = verify_observations(&fixture).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.notes.get("det_dual").unwrap(), "2880");
    }

    #[test]
    fn observed_failures_do_not_mask_proved_checks() {
        let mut fixture = make_trivial_fixture(4, 4).unwrap();
        fixture.values[(1, 2)] += BigInt::from(3);
        let report = verify_observations(&fixture).unwrap();
        assert!(!report.passed());
        // both classes of checks are present in the verdict
        assert!(report
            .checks
            .iter()
            .any(|c| c.kind == crate::report::CheckKind::Proved));
        assert!(report
            .checks
            .iter()
            .any(|c| c.kind == crate::report::CheckKind::Observed));
        // proved determinant check ran and reported (pass or fail, not NA)
        let det_check = report
            .checks
            .iter()
            .find(|c| c.name == "det_dual_matches_b_product")
            .unwrap();
        assert_ne!(det_check.status, CheckStatus::NotApplicable);
    }

    #[test]
    fn dominance_helper() {
        let a: Partition = "4".parse().unwrap();
        let b: Partition = "2^2".parse().unwrap();
        let c: Partition = "1,3".parse().unwrap();
        assert!(dominates(&a, &b));
        assert!(dominates(&a, &c));
        assert!(dominates(&c, &b));
        assert!(!dominates(&b, &c));
        assert!(dominates(&b, &b));
    }
}
