//! Name-addressable partition classes: one entry point for membership,
//! enumeration, counting, and equinumerosity comparisons across every class
//! the crate knows about.

use num_bigint::BigUint;
use thiserror::Error;

use crate::classes::{
    self, for_each_partition_upto, AndrewsParams,
};
use crate::partitions::{OddModulus, Partition};
use crate::schur_construction::SchurMachine;
use crate::series_count::{compare_counts, congruence_series, d_class_series, IntSeries, PtReport};
use crate::sp_class;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegistryError {
    #[error("unknown class {0:?}")]
    UnknownClass(String),
    #[error("class {0} requires --p")]
    MissingModulus(String),
    #[error("class {class} needs parameters {expected:?}, got {got:?}")]
    BadParams {
        class: String,
        expected: &'static str,
        got: String,
    },
    #[error(transparent)]
    Class(#[from] classes::ClassError),
    #[error(transparent)]
    Partition(#[from] crate::partitions::PartitionError),
}

/// A partition class selectable by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSpec {
    /// strict and p-class-regular
    D,
    /// the gap-and-pattern class the crystal lives on
    Sp,
    /// blockwise insertion image of S_p
    SchurImage,
    /// restricted p-strict
    Rp,
    /// Rogers-Ramanujan gap class
    R,
    /// R with no part 1
    RPrime,
    /// parts congruent to +-a mod b
    T { a: u64, b: u64 },
    AndrewsA(AndrewsParams),
    AndrewsB(AndrewsParams),
    /// the refined (C1)-(C4) class at modulus 5
    B433,
    Schur3,
    Schur5,
    Strict,
}

impl ClassSpec {
    /// Parses a CLI-style class name with optional comma-separated
    /// parameters (`t` takes `a,b`; `a` and `b` take `l,k,a`).
    pub fn parse(name: &str, params: Option<&str>) -> Result<Self, RegistryError> {
        let numbers = || -> Result<Vec<u64>, RegistryError> {
            params
                .unwrap_or("")
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim().parse::<u64>().map_err(|_| RegistryError::BadParams {
                        class: name.to_string(),
                        expected: "comma-separated integers",
                        got: params.unwrap_or("").to_string(),
                    })
                })
                .collect()
        };
        match name {
            "dp" | "d" => Ok(ClassSpec::D),
            "sp" => Ok(ClassSpec::Sp),
            "schur" => Ok(ClassSpec::SchurImage),
            "rp" => Ok(ClassSpec::Rp),
            "r" => Ok(ClassSpec::R),
            "rprime" => Ok(ClassSpec::RPrime),
            "t" => {
                let v = numbers()?;
                if v.len() != 2 || v[0] == 0 || v[1] <= v[0] {
                    return Err(RegistryError::BadParams {
                        class: name.to_string(),
                        expected: "a,b with 0 < a < b",
                        got: params.unwrap_or("").to_string(),
                    });
                }
                Ok(ClassSpec::T { a: v[0], b: v[1] })
            }
            "a" | "b" => {
                let v = numbers()?;
                if v.len() != 3 {
                    return Err(RegistryError::BadParams {
                        class: name.to_string(),
                        expected: "l,k,a",
                        got: params.unwrap_or("").to_string(),
                    });
                }
                let prm = AndrewsParams::new(v[0], v[1], v[2])?;
                Ok(if name == "a" {
                    ClassSpec::AndrewsA(prm)
                } else {
                    ClassSpec::AndrewsB(prm)
                })
            }
            "b433" => Ok(ClassSpec::B433),
            "schur3" => Ok(ClassSpec::Schur3),
            "schur5" => Ok(ClassSpec::Schur5),
            "strict" => Ok(ClassSpec::Strict),
            other => Err(RegistryError::UnknownClass(other.to_string())),
        }
    }

    pub fn requires_p(&self) -> bool {
        matches!(
            self,
            ClassSpec::D | ClassSpec::Sp | ClassSpec::SchurImage | ClassSpec::Rp
        )
    }

    /// Binds the class to a modulus, building whatever tables it needs.
    pub fn bind(self, p: Option<u64>) -> Result<BoundClass, RegistryError> {
        let m = match p {
            Some(p) => Some(OddModulus::new(p)?),
            None => None,
        };
        if self.requires_p() && m.is_none() {
            return Err(RegistryError::MissingModulus(self.label(None)));
        }
        let machine = if matches!(self, ClassSpec::SchurImage) {
            Some(SchurMachine::new(m.unwrap()))
        } else {
            None
        };
        Ok(BoundClass {
            spec: self,
            m,
            machine,
        })
    }

    pub fn label(&self, p: Option<u64>) -> String {
        let with_p = |base: &str| match p {
            Some(p) => format!("{base}_{p}"),
            None => format!("{base}_p"),
        };
        match self {
            ClassSpec::D => with_p("D"),
            ClassSpec::Sp => with_p("S"),
            ClassSpec::SchurImage => with_p("Schur"),
            ClassSpec::Rp => with_p("RP"),
            ClassSpec::R => "R".into(),
            ClassSpec::RPrime => "R'".into(),
            ClassSpec::T { a, b } => format!("T_{{{a},{b}}}"),
            ClassSpec::AndrewsA(prm) => format!("A_{{{},{},{}}}", prm.l, prm.k, prm.a),
            ClassSpec::AndrewsB(prm) => format!("B_{{{},{},{}}}", prm.l, prm.k, prm.a),
            ClassSpec::B433 => "B°_{4,3,3}".into(),
            ClassSpec::Schur3 => "Schur_3".into(),
            ClassSpec::Schur5 => "Schur_5".into(),
            ClassSpec::Strict => "strict".into(),
        }
    }
}

/// A class bound to its modulus and ready to answer queries.
pub struct BoundClass {
    pub spec: ClassSpec,
    pub m: Option<OddModulus>,
    machine: Option<SchurMachine>,
}

impl BoundClass {
    pub fn label(&self) -> String {
        self.spec.label(self.m.map(|m| m.p()))
    }

    fn m(&self) -> &OddModulus {
        self.m.as_ref().expect("bound with a modulus")
    }

    pub fn contains(&self, lam: &Partition) -> bool {
        match &self.spec {
            ClassSpec::D => classes::is_d_class(lam, self.m()),
            ClassSpec::Sp => sp_class::sp_membership(lam, self.m()),
            ClassSpec::SchurImage => self.machine.as_ref().unwrap().contains(lam),
            ClassSpec::Rp => classes::is_restricted_p_strict(lam, self.m()),
            ClassSpec::R => classes::is_rr_gap(lam),
            ClassSpec::RPrime => classes::is_rr_gap_prime(lam),
            ClassSpec::T { a, b } => classes::is_congruence_class(lam, *a, *b),
            ClassSpec::AndrewsA(prm) => classes::is_andrews_a(lam, prm),
            ClassSpec::AndrewsB(prm) => classes::is_andrews_b(lam, prm),
            ClassSpec::B433 => classes::is_b433_refined(lam),
            ClassSpec::Schur3 => classes::is_schur3(lam),
            ClassSpec::Schur5 => classes::is_schur5(lam),
            ClassSpec::Strict => classes::is_strict(lam),
        }
    }

    /// A cheap necessary condition for appending `v` below `prefix`,
    /// used to prune enumeration; the final filter is [`Self::contains`].
    fn step_ok(&self, prefix: &[u64], v: u64) -> bool {
        let last = prefix.last().copied();
        let strict_step = last.map_or(true, |l| l > v);
        match &self.spec {
            ClassSpec::Strict | ClassSpec::D | ClassSpec::SchurImage => strict_step,
            ClassSpec::Sp => unreachable!("S_p uses its own enumerator"),
            ClassSpec::Rp => {
                let p = self.m().p();
                let p_strict = last.map_or(true, |l| l > v || l % p == 0);
                let gap = last.map_or(true, |l| l - v < p || (l - v == p && l % p != 0));
                p_strict && gap
            }
            ClassSpec::R | ClassSpec::RPrime => last.map_or(true, |l| l >= v + 2),
            ClassSpec::T { a, b } => v % b == a % b || v % b == (b - a % b) % b,
            ClassSpec::AndrewsA(prm) => {
                let strictness = if prm.l % 2 == 0 { prm.l + 1 } else { (prm.l + 1) / 2 };
                last.map_or(true, |l| l > v || l % strictness == 0)
            }
            ClassSpec::AndrewsB(prm) => {
                let ok_strict = last.map_or(true, |l| l > v || l % (prm.l + 1) == 0);
                let ok_gap = if prm.k >= 2 && prefix.len() >= (prm.k - 1) as usize {
                    let above = prefix[prefix.len() - (prm.k - 1) as usize];
                    above - v > prm.l
                } else {
                    true
                };
                ok_strict && ok_gap
            }
            ClassSpec::B433 => {
                let ok_strict = last.map_or(true, |l| l > v || l % 5 == 0);
                let ok_gap = if prefix.len() >= 2 {
                    let above = prefix[prefix.len() - 2];
                    above - v > 5 || (above - v == 5 && above % 5 != 0)
                } else {
                    true
                };
                ok_strict && ok_gap
            }
            ClassSpec::Schur3 => last.map_or(true, |l| l - v > 3 || (l - v == 3 && l % 3 != 0)),
            ClassSpec::Schur5 => {
                let ok = if prefix.len() >= 2 {
                    prefix[prefix.len() - 2] - v >= 5
                } else {
                    true
                };
                strict_step && ok
            }
        }
    }

    /// Counts per size `0 ..= max_n`.
    pub fn counts_upto(&self, max_n: u64) -> Vec<u64> {
        if matches!(self.spec, ClassSpec::Sp) {
            return sp_class::sp_counts_upto(self.m(), max_n);
        }
        let mut tally = vec![0u64; max_n as usize + 1];
        for_each_partition_upto(
            max_n,
            &|prefix, v| self.step_ok(prefix, v),
            &|prefix| {
                let lam = Partition::new(prefix.to_vec()).expect("sorted prefix");
                self.contains(&lam)
            },
            &mut |_, sum| tally[sum as usize] += 1,
        );
        tally
    }

    /// Every member of size exactly `n`, lexicographically decreasing.
    pub fn enumerate(&self, n: u64) -> Vec<Partition> {
        if matches!(self.spec, ClassSpec::Sp) {
            return sp_class::enumerate_sp(self.m(), n);
        }
        let mut out = Vec::new();
        for_each_partition_upto(
            n,
            &|prefix, v| self.step_ok(prefix, v),
            &|prefix| {
                let lam = Partition::new(prefix.to_vec()).expect("sorted prefix");
                self.contains(&lam)
            },
            &mut |prefix, sum| {
                if sum == n {
                    out.push(Partition::new(prefix.to_vec()).expect("sorted prefix"));
                }
            },
        );
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// Number of members with size `n` and exactly `len` parts.
    pub fn two_variable_count(&self, n: u64, len: usize) -> u64 {
        self.enumerate(n)
            .into_iter()
            .filter(|lam| lam.len() == len)
            .count() as u64
    }

    /// Counting series; classes with a product form use it, the rest count
    /// by enumeration.
    pub fn series(&self, truncation: usize) -> IntSeries {
        match &self.spec {
            ClassSpec::D => d_class_series(self.m(), truncation),
            ClassSpec::T { a, b } => congruence_series(*a, *b, truncation),
            _ => IntSeries::from_counts(&self.counts_upto(truncation as u64)),
        }
    }
}

/// Counts both classes up to `max_n` and reports the comparison, including
/// sample members at the first mismatching size.
pub fn verify_pt_equivalence(a: &BoundClass, b: &BoundClass, max_n: u64) -> PtReport {
    let counts_a: Vec<BigUint> = a
        .counts_upto(max_n)
        .iter()
        .map(|&c| BigUint::from(c))
        .collect();
    let counts_b: Vec<BigUint> = b
        .counts_upto(max_n)
        .iter()
        .map(|&c| BigUint::from(c))
        .collect();
    let mut report = compare_counts(&a.label(), &b.label(), counts_a, counts_b);
    if let Some(n) = report.first_mismatch {
        report.witness_a = a.enumerate(n).into_iter().take(4).collect();
        report.witness_b = b.enumerate(n).into_iter().take(4).collect();
    }
    report
}

/// Set-level comparison: both classes restricted to sizes `0 ..= max_n`
/// must contain exactly the same partitions. Returns the first
/// counterexample as `(partition, in_a, in_b)`.
pub fn verify_set_equality(
    a: &BoundClass,
    b: &BoundClass,
    max_n: u64,
) -> Option<(Partition, bool, bool)> {
    for n in 0..=max_n {
        let (ea, eb) = (a.enumerate(n), b.enumerate(n));
        if ea != eb {
            for lam in ea.iter().chain(eb.iter()) {
                let (ia, ib) = (a.contains(lam), b.contains(lam));
                if ia != ib {
                    return Some((lam.clone(), ia, ib));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parts;

    fn bound(name: &str, params: Option<&str>, p: Option<u64>) -> BoundClass {
        ClassSpec::parse(name, params).unwrap().bind(p).unwrap()
    }

    #[test]
    fn parse_and_bind() {
        assert!(ClassSpec::parse("dp", None).is_ok());
        assert!(ClassSpec::parse("nope", None).is_err());
        assert!(ClassSpec::parse("t", Some("1,5")).is_ok());
        assert!(ClassSpec::parse("t", Some("5,1")).is_err());
        assert!(ClassSpec::parse("a", Some("0,2,2")).is_ok());
        assert!(ClassSpec::parse("dp", None).unwrap().bind(None).is_err());
        assert!(ClassSpec::parse("dp", None).unwrap().bind(Some(4)).is_err());
    }

    #[test]
    fn count_examples() {
        let d3 = bound("dp", None, Some(3));
        assert_eq!(d3.counts_upto(6)[6], 2);
        let s3 = bound("sp", None, Some(3));
        assert_eq!(s3.counts_upto(6)[6], 2);
        let t15 = bound("t", Some("1,5"), None);
        assert_eq!(t15.counts_upto(7)[7], 3);
    }

    #[test]
    fn two_variable_examples() {
        let r = bound("r", None, None);
        assert_eq!(r.two_variable_count(7, 1), 1);
        assert_eq!(r.two_variable_count(7, 2), 2);
        assert_eq!(r.two_variable_count(0, 0), 1);
        // the two-variable counts refine the plain ones
        for n in 0..=14u64 {
            let total: u64 = (0..=n as usize)
                .map(|l| r.two_variable_count(n, l))
                .sum();
            assert_eq!(total, r.counts_upto(n)[n as usize]);
        }
    }

    #[test]
    fn series_and_enumeration_agree() {
        for (name, params, p) in [
            ("dp", None, Some(7u64)),
            ("t", Some("2,5"), None),
        ] {
            let class = bound(name, params, p);
            let series = class.series(20);
            let counts = class.counts_upto(20);
            for n in 0..=20usize {
                assert_eq!(
                    series.coeff(n),
                    &num_bigint::BigUint::from(counts[n]),
                    "{name} at {n}"
                );
            }
        }
    }

    #[test]
    fn rrpt_desk_scale() {
        let r = bound("r", None, None);
        let t15 = bound("t", Some("1,5"), None);
        assert!(verify_pt_equivalence(&r, &t15, 40).pass());
        let rp = bound("rprime", None, None);
        let t25 = bound("t", Some("2,5"), None);
        assert!(verify_pt_equivalence(&rp, &t25, 40).pass());
    }

    #[test]
    fn membership_examples() {
        let d7 = bound("dp", None, Some(7));
        assert!(!d7.contains(&parts(&[7, 3])));
        let schur3 = bound("schur3", None, None);
        assert!(!schur3.contains(&parts(&[6, 3])));
        let schur5 = bound("schur5", None, None);
        assert!(!schur5.contains(&parts(&[11, 9, 5])));
        let r = bound("r", None, None);
        assert!(r.contains(&parts(&[5, 2])));
    }

    #[test]
    fn set_equality_s5_vs_b433() {
        let s5 = bound("sp", None, Some(5));
        let b = bound("b433", None, None);
        assert_eq!(verify_set_equality(&s5, &b, 24), None);
    }
}
