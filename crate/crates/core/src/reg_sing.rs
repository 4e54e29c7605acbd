//! Regular and singular character tables for a modulus ell (not necessarily
//! prime).
//!
//! A partition is ell-regular when no part size repeats ell or more times,
//! and ell-class-regular when no part is divisible by ell. X_reg is the
//! submatrix of the character table on ell-regular characters and
//! ell-class-regular classes; X_sing is the complementary block. The checks:
//!
//!   |det X_reg|  = prod a_mu over class-regular mu
//!   |det X_sing| = prod b_mu over class-singular mu
//!   regular restrictions are a basic set on class-regular columns (and
//!   dually for the singular side)
//!   det C_reg = det C_sing = (prod b / prod a over class-regular mu),
//!   and that quotient is a power of ell.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::basic_sets::{basic_set_test, DecompositionReport};
use crate::char_tables::CharTable;
use crate::error::Error;
use crate::linalg::IntMatrix;
use crate::partitions::Partition;
use crate::report::Report;

/// The four blocks of the character table cut by regularity.
#[derive(Clone, Debug)]
pub struct RegSingTables {
    pub ell: u32,
    pub regular_rows: Vec<usize>,
    pub singular_rows: Vec<usize>,
    pub class_regular_cols: Vec<usize>,
    pub class_singular_cols: Vec<usize>,
    pub regular_labels: Vec<Partition>,
    pub class_regular_labels: Vec<Partition>,
    pub singular_labels: Vec<Partition>,
    pub class_singular_labels: Vec<Partition>,
    /// Regular characters on class-regular classes.
    pub x_reg: IntMatrix,
    /// Singular characters on class-singular classes.
    pub x_sing: IntMatrix,
    /// All characters on class-regular classes.
    pub xbar_reg: IntMatrix,
    /// All characters on class-singular classes.
    pub xbar_sing: IntMatrix,
}

pub fn build(x: &CharTable, ell: u32) -> Result<RegSingTables, Error> {
    if ell < 2 {
        return Err(Error::Precondition(format!("ell = {ell} must be >= 2")));
    }
    let labels = x.labels();
    let pick = |f: &dyn Fn(&Partition) -> bool| -> Vec<usize> {
        (0..labels.len()).filter(|&i| f(&labels[i])).collect()
    };
    let regular_rows = pick(&|l| l.is_regular(ell));
    let singular_rows = pick(&|l| !l.is_regular(ell));
    let class_regular_cols = pick(&|l| l.is_class_regular(ell));
    let class_singular_cols = pick(&|l| !l.is_class_regular(ell));
    let by_index = |idx: &[usize]| -> Vec<Partition> {
        idx.iter().map(|&i| labels[i].clone()).collect()
    };
    let all: Vec<usize> = (0..labels.len()).collect();
    Ok(RegSingTables {
        ell,
        x_reg: x.values().submatrix(&regular_rows, &class_regular_cols),
        x_sing: x.values().submatrix(&singular_rows, &class_singular_cols),
        xbar_reg: x.values().submatrix(&all, &class_regular_cols),
        xbar_sing: x.values().submatrix(&all, &class_singular_cols),
        regular_labels: by_index(&regular_rows),
        class_regular_labels: by_index(&class_regular_cols),
        singular_labels: by_index(&singular_rows),
        class_singular_labels: by_index(&class_singular_cols),
        regular_rows,
        singular_rows,
        class_regular_cols,
        class_singular_cols,
    })
}

fn ab_products(labels: &[Partition]) -> (BigInt, BigInt) {
    let mut a = BigInt::one();
    let mut b = BigInt::one();
    for mu in labels {
        let s = mu.stats();
        a *= s.a;
        b *= s.b;
    }
    (a, b)
}

/// True when every prime factor of `value` divides ell.
fn prime_factors_divide(value: &BigInt, ell: u32) -> bool {
    let ell = BigInt::from(ell);
    let mut v = value.abs();
    loop {
        if v.is_one() {
            return true;
        }
        let g = num_integer::Integer::gcd(&v, &ell);
        if g.is_one() {
            return false;
        }
        v /= g;
    }
}

/// True when value = ell^e for some e >= 0.
fn is_power_of(value: &BigInt, ell: u32) -> bool {
    let ell = BigInt::from(ell);
    let mut v = value.abs();
    while !v.is_one() {
        let (q, r) = num_integer::Integer::div_rem(&v, &ell);
        if !r.is_zero() {
            return false;
        }
        v = q;
    }
    true
}

pub fn verify_section5(x: &CharTable, ell: u32) -> Result<Report, Error> {
    let tables = build(x, ell)?;
    let mut report = Report::new(format!("section5 n={} ell={}", x.n(), ell));

    let shapes_square = tables.x_reg.is_square() && tables.x_sing.is_square();
    report.check(
        "tables_are_square",
        shapes_square,
        vec![
            (
                "regular",
                format!("{}x{}", tables.x_reg.rows(), tables.x_reg.cols()),
            ),
            (
                "singular",
                format!("{}x{}", tables.x_sing.rows(), tables.x_sing.cols()),
            ),
        ],
    );
    if !shapes_square {
        return Ok(report);
    }

    let (a_creg, b_creg) = ab_products(&tables.class_regular_labels);
    let (a_csing, b_csing) = ab_products(&tables.class_singular_labels);

    let det_reg = tables.x_reg.det()?;
    report.check(
        "det_regular_abs_matches_a_product",
        det_reg.abs() == a_creg,
        vec![
            ("det", det_reg.to_string()),
            ("expected_abs", a_creg.to_string()),
        ],
    );

    let det_sing = tables.x_sing.det()?;
    report.check(
        "det_singular_abs_matches_b_product",
        det_sing.abs() == b_csing,
        vec![
            ("det", det_sing.to_string()),
            ("expected_abs", b_csing.to_string()),
        ],
    );

    let reg_rep = basic_set_test(&tables.xbar_reg, &tables.regular_rows)?;
    let sing_rep = basic_set_test(&tables.xbar_sing, &tables.singular_rows)?;
    report.check("basic_set_regular", reg_rep.is_basic, vec![]);
    report.check("basic_set_singular", sing_rep.is_basic, vec![]);

    match (cartan_det(&reg_rep)?, cartan_det(&sing_rep)?) {
        (Some(det_c_reg), Some(det_c_sing)) => {
            report.check(
                "cartan_dets_equal",
                det_c_reg == det_c_sing,
                vec![
                    ("regular", det_c_reg.to_string()),
                    ("singular", det_c_sing.to_string()),
                ],
            );
            report.check(
                "cartan_det_matches_quotient",
                &det_c_reg * &a_creg == b_creg && &det_c_sing * &b_csing == a_csing,
                vec![
                    ("det", det_c_reg.to_string()),
                    ("b_creg", b_creg.to_string()),
                    ("a_creg", a_creg.to_string()),
                    ("a_csing", a_csing.to_string()),
                    ("b_csing", b_csing.to_string()),
                ],
            );
            report.check(
                "quotient_prime_factors_divide_ell",
                prime_factors_divide(&det_c_reg, ell),
                vec![("det", det_c_reg.to_string())],
            );
            report.check(
                "quotient_is_power_of_ell",
                is_power_of(&det_c_reg, ell),
                vec![("det", det_c_reg.to_string()), ("ell", ell.to_string())],
            );
            report.note("cartan_det", det_c_reg.to_string());
        }
        _ => {
            for name in [
                "cartan_dets_equal",
                "cartan_det_matches_quotient",
                "quotient_prime_factors_divide_ell",
                "quotient_is_power_of_ell",
            ] {
                report.not_applicable(name, "a basic-set test failed");
            }
        }
    }

    Ok(report)
}

fn cartan_det(rep: &DecompositionReport) -> Result<Option<BigInt>, Error> {
    match rep.cartan() {
        Some(c) => Ok(Some(c.det()?)),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count, PartSet};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn build_s5_ell2() {
        let x = CharTable::build(5).unwrap();
        let t = build(&x, 2).unwrap();
        let reg: Vec<String> = t.regular_labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(reg, ["2,3", "1,4", "5"]);
        let creg: Vec<String> = t.class_regular_labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(creg, ["1^5", "1^2,3", "5"]);
        assert_eq!(
            t.x_reg,
            IntMatrix::from_i64(&[&[5, -1, 0], &[4, 1, -1], &[1, 1, 1]])
        );
    }

    #[test]
    fn build_n2_ell2() {
        let x = CharTable::build(2).unwrap();
        let t = build(&x, 2).unwrap();
        assert_eq!(t.x_reg, IntMatrix::from_i64(&[&[1]]));
        assert_eq!(t.regular_labels[0].to_string(), "2");
        assert_eq!(t.class_regular_labels[0].to_string(), "1^2");
    }

    #[test]
    fn shapes_match_glaisher_counts() {
        let x = CharTable::build(6).unwrap();
        let t = build(&x, 3).unwrap();
        assert!(t.x_reg.is_square());
        assert!(t.x_sing.is_square());
        let nonmult = count(6, &PartSet::NonMultiples(3));
        assert_eq!(t.x_reg.rows() as u64, nonmult);
    }

    #[test]
    fn verify_s5_ell2_hand_values() {
        let x = CharTable::build(5).unwrap();
        let t = build(&x, 2).unwrap();
        assert_eq!(t.x_reg.det().unwrap().abs(), big(15));

        let report = verify_section5(&x, 2).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.notes.get("cartan_det").unwrap(), "16");
    }

    #[test]
    fn verify_trivial_n1() {
        let x = CharTable::build(1).unwrap();
        for ell in 2..=6 {
            let report = verify_section5(&x, ell).unwrap();
            assert!(report.passed(), "ell={ell}");
            assert_eq!(report.notes.get("cartan_det").unwrap(), "1");
        }
    }

    #[test]
    fn rejects_ell_below_two() {
        let x = CharTable::build(3).unwrap();
        assert!(build(&x, 1).is_err());
    }

    #[test]
    fn cartan_dets_are_exact_integers_not_abs() {
        // det C_reg and det C_sing agree as signed integers
        for n in 1..=7u32 {
            let x = CharTable::build(n).unwrap();
            for ell in 2..=4 {
                let t = build(&x, ell).unwrap();
                let reg = basic_set_test(&t.xbar_reg, &t.regular_rows).unwrap();
                let sing = basic_set_test(&t.xbar_sing, &t.singular_rows).unwrap();
                let dr = reg.cartan().unwrap().det().unwrap();
                let ds = sing.cartan().unwrap().det().unwrap();
                assert_eq!(dr, ds, "n={n} ell={ell}");
                assert!(dr > BigInt::zero());
            }
        }
    }

    #[test]
    fn detects_corruption() {
        let x = CharTable::build(5).unwrap();
        let mut bad = x.values().clone();
        bad[(0, 0)] += big(2);
        let corrupted = CharTable::from_parts(5, x.labels().to_vec(), bad).unwrap();
        let report = verify_section5(&corrupted, 2).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn power_helpers() {
        assert!(is_power_of(&big(16), 2));
        assert!(is_power_of(&big(1), 7));
        assert!(!is_power_of(&big(12), 2));
        assert!(is_power_of(&big(36), 6));
        assert!(prime_factors_divide(&big(12), 6));
        assert!(!prime_factors_divide(&big(10), 6));
    }
}
