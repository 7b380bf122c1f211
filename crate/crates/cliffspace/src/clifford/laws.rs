//! Exact algebra-law checks over batches of random homogeneous elements.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::linalg::rat_int;
use crate::report::Report;

use super::{CliffordElement, QuadricFamily};

/// Associativity, the Clifford relation, and the exterior-product
/// degeneration at `q = 0`, all checked exactly. `triples` random
/// homogeneous triples are spread across the given families.
pub fn law_report(families: &[Arc<QuadricFamily>], seed: u64, triples: usize) -> Report {
    let mut report = Report::new("clifford-laws");
    let mut rng = ChaCha20Rng::seed_from_u64(seed);

    let mut assoc_failures = 0usize;
    let mut checked = 0usize;
    while checked < triples {
        for family in families {
            let dx = rng.gen_range(0..=3);
            let dy = rng.gen_range(0..=3);
            let dz = rng.gen_range(0..=3);
            let x = CliffordElement::random_homogeneous(family, dx, &mut rng);
            let y = CliffordElement::random_homogeneous(family, dy, &mut rng);
            let z = CliffordElement::random_homogeneous(family, dz, &mut rng);
            let left = x.mul(&y).and_then(|xy| xy.mul(&z));
            let right = y.mul(&z).and_then(|yz| x.mul(&yz));
            match (left, right) {
                (Ok(l), Ok(r)) if l == r => {}
                _ => assoc_failures += 1,
            }
            checked += 1;
            if checked >= triples {
                break;
            }
        }
    }
    report.check(
        format!("associativity on {checked} random homogeneous triples"),
        assoc_failures == 0,
        format!("{assoc_failures} failures"),
        "0 failures".to_string(),
        "eq:clifford-multiplication",
    );

    let mut relation_ok = true;
    for family in families {
        let n = family.n();
        for a in 0..n {
            for b in 0..n {
                let x = CliffordElement::generator(family, a);
                let y = CliffordElement::generator(family, b);
                let anti = x
                    .mul(&y)
                    .and_then(|xy| y.mul(&x).and_then(|yx| xy.add(&yx)))
                    .expect("same family");
                let mut expected = CliffordElement::zero(family);
                for (c, coeff) in family.q_pair(a, b).iter().enumerate() {
                    let mut mono = vec![0u8; family.k()];
                    mono[c] = 1;
                    expected = expected
                        .add(
                            &CliffordElement::basis_element(family, 0, mono)
                                .scale(&(coeff * rat_int(2))),
                        )
                        .expect("same family");
                }
                relation_ok &= anti == expected;
            }
        }
    }
    report.check(
        "v·w + w·v = 2q(v,w) on all generator pairs",
        relation_ok,
        if relation_ok { "holds" } else { "violated" }.to_string(),
        "holds".to_string(),
        "eq:clifford-multiplication",
    );

    // q = 0 degeneration: products are exterior products
    let zero = Arc::new(QuadricFamily::zero_family(3, 2));
    let mut wedge_ok = true;
    for _ in 0..40 {
        let d = rng.gen_range(0..=3);
        let x = CliffordElement::random_homogeneous(&zero, d, &mut rng);
        let sq = x.mul(&x).expect("same family");
        if d % 2 == 1 && !sq.is_zero() {
            wedge_ok = false; // odd elements square to zero under the wedge
        }
    }
    for a in 0..3 {
        let g = CliffordElement::generator(&zero, a);
        wedge_ok &= g.mul(&g).expect("same family").is_zero();
    }
    // shuffle signs on a couple of fixed words
    let w1 = CliffordElement::generator_product(&zero, &[2, 0, 1]);
    let w2 = CliffordElement::generator_product(&zero, &[1, 0, 2]);
    wedge_ok &= w1 == CliffordElement::basis_element(&zero, 0b111, vec![0, 0]);
    wedge_ok &= w2 == CliffordElement::basis_element(&zero, 0b111, vec![0, 0]).scale(&rat_int(-1));
    report.check(
        "q = 0 degenerates to the exterior product",
        wedge_ok,
        if wedge_ok { "wedge product" } else { "unexpected products" }.to_string(),
        "wedge product".to_string(),
        "eq:cliff-i-again",
    );

    report
}
