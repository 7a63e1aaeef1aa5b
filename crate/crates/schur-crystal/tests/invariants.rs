//! Full-scale module invariants that are too heavy for inline unit tests:
//! the three equivalent membership forms agree on every partition up to
//! size 50 for all supported moduli, and the insertion image is
//! equinumerous with the distinct-parts class at modulus 9 as well.

use rayon::prelude::*;

use schur_crystal::classes::for_each_partition_upto;
use schur_crystal::partitions::{OddModulus, Partition};
use schur_crystal::schur_construction::SchurMachine;
use schur_crystal::series_count::d_class_series;
use schur_crystal::sp_class::{
    sp_local_membership, sp_membership, sp_membership_compact, sp_membership_theorem_form,
};

#[test]
fn membership_forms_agree_to_50() {
    let pass = [3u64, 5, 7, 9, 11].par_iter().all(|&p| {
        let m = OddModulus::new(p).unwrap();
        let mut ok = true;
        let any = |pre: &[u64], v: u64| pre.last().map_or(true, |&l| l >= v);
        for_each_partition_upto(50, &any, &|_| true, &mut |prefix, _| {
            let lam = Partition::new(prefix.to_vec()).unwrap();
            let a = sp_membership(&lam, &m);
            ok &= a == sp_membership_theorem_form(&lam, &m)
                && a == sp_membership_compact(&lam, &m)
                && a == sp_local_membership(&lam, &m);
        });
        ok
    });
    assert!(pass);
}

#[test]
fn insertion_image_is_equinumerous_with_d_up_to_9() {
    for p in [3u64, 5, 7, 9] {
        let m = OddModulus::new(p).unwrap();
        let machine = SchurMachine::new(m);
        let mut counts = vec![0u64; 51];
        let strict = |pre: &[u64], v: u64| pre.last().map_or(true, |&l| l > v);
        for_each_partition_upto(50, &strict, &|_| true, &mut |prefix, sum| {
            let lam = Partition::new(prefix.to_vec()).unwrap();
            if machine.contains(&lam) {
                counts[sum as usize] += 1;
            }
        });
        let d = d_class_series(&m, 50);
        for n in 0..=50usize {
            assert_eq!(
                num_bigint::BigUint::from(counts[n]),
                *d.coeff(n),
                "p={p}, n={n}"
            );
        }
    }
}
