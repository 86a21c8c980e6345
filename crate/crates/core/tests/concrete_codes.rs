//! Build, glue and exhaustively exercise the concrete codes.

use itertools::Itertools;

use regen_core::codes::{build_glued, build_small_msr, GlueOptions};
use regen_core::exactmath::{int, rat};
use regen_core::gf::PrimeField;
use regen_core::simulate::{mk_oracle, subset_information, sweep_reconstructions, sweep_repairs};
use regen_core::tradeoff::{
    construction1_point, construction2_file_size, match_small_code, ParityRule, SystemParams,
};
use regen_core::Error;

fn gf11() -> PrimeField {
    PrimeField::new(11).unwrap()
}

fn opts(seed: u64) -> GlueOptions {
    GlueOptions {
        seed,
        ..Default::default()
    }
}

#[test]
fn five_three_three_sweep() {
    let code = build_glued(5, 2, gf11(), &opts(7)).unwrap();
    let ledger = sweep_repairs(&code, 3).unwrap();
    assert_eq!(ledger.records.len(), 5 * 4);
    assert_eq!(ledger.alpha, rat(2, 5));
    assert_eq!(ledger.gamma, rat(3, 4));
    assert_eq!(ledger.nonempty_gamma, rat(15, 16));
    assert!(ledger.node_gamma.iter().all(|g| *g == rat(3, 4)));
    assert_eq!(sweep_reconstructions(&code, 3).unwrap(), 10);
}

#[test]
fn any_single_node_holds_its_storage_share() {
    let code = build_glued(5, 2, gf11(), &opts(1)).unwrap();
    for v in 0..5 {
        assert_eq!(subset_information(&code, &[v]), rat(2, 5));
    }
    for s in (0..5).combinations(3) {
        assert_eq!(subset_information(&code, &s), int(1));
    }
}

#[test]
fn information_of_small_code_subsets() {
    // n = n_hat: no empty nodes, so the glued code's rank profile is the
    // small code's: min(w, k_hat) * alpha_hat per unit file.
    for k_hat in 1..=3 {
        let n = k_hat + 2;
        let code = build_glued(n, k_hat, gf11(), &opts(0)).unwrap();
        for w in 0..=n {
            for s in (0..n).combinations(w) {
                assert_eq!(
                    subset_information(&code, &s),
                    rat(w.min(k_hat) as i64, k_hat as i64),
                    "k_hat={k_hat} subset={s:?}"
                );
            }
        }
    }
}

#[test]
fn every_subset_matches_the_average_information() {
    // The glued (5, .) build with k_hat = 2 is the construction-2 layout for
    // (n, k, d) = (5, 2, 3): n_hat = k_hat + n - d = 4. Every 2-subset should
    // hold exactly M_k.
    let p = SystemParams::new(5, 2, 3).unwrap();
    let small = match_small_code(&p, 2, ParityRule::Repair).unwrap();
    let mk = construction2_file_size(&p, &small).unwrap();
    assert_eq!(mk, rat(4, 5));
    assert_eq!(mk_oracle(&p, 2).unwrap(), mk);
    let code = build_glued(5, 2, gf11(), &opts(2)).unwrap();
    for s in (0..5).combinations(2) {
        assert_eq!(subset_information(&code, &s), mk, "{s:?}");
    }
}

#[test]
fn measured_matches_analytic_for_all_small_builds() {
    for n in 3..=6 {
        let k = n - 2;
        for d in [k, k + 1] {
            let p = SystemParams::new(n, k, d).unwrap();
            for k_hat in 1..=k.min(3) {
                let code = build_glued(n, k_hat, gf11(), &opts(n as u64)).unwrap();
                let ledger = sweep_repairs(&code, d).unwrap();
                let analytic = construction1_point(&p, k_hat).unwrap();
                assert_eq!(
                    (ledger.alpha, ledger.gamma),
                    (analytic.alpha, analytic.gamma),
                    "{p} k_hat={k_hat}"
                );
                assert_eq!(
                    sweep_reconstructions(&code, k).unwrap(),
                    (0..n).combinations(k).count()
                );
            }
        }
    }
}

#[test]
fn seven_node_build() {
    let p = SystemParams::new(7, 5, 5).unwrap();
    let code = build_glued(7, 3, gf11(), &opts(4)).unwrap();
    assert_eq!(code.copies.len(), 5040);
    let ledger = sweep_repairs(&code, 5).unwrap();
    let analytic = construction1_point(&p, 3).unwrap();
    assert_eq!(ledger.gamma, analytic.gamma);
    assert_eq!(ledger.alpha, analytic.alpha);
}

#[test]
fn other_fields_work() {
    for q in [13, 17, 257] {
        let code = build_glued(5, 2, PrimeField::new(q).unwrap(), &opts(3)).unwrap();
        assert_eq!(sweep_repairs(&code, 3).unwrap().gamma, rat(3, 4));
    }
    for q in [2, 3, 5, 7] {
        assert!(matches!(
            build_small_msr(4, 2, PrimeField::new(q).unwrap()),
            Err(Error::Construction(_))
        ));
    }
}

#[test]
fn sweep_reports_offending_pair() {
    let mut code = build_glued(5, 2, gf11(), &opts(7)).unwrap();
    // copy 0 is the identity layout; node 3 is a small-code node there
    code.tamper(3, 0).unwrap();
    match sweep_repairs(&code, 3) {
        Err(Error::RepairMismatch {
            failed,
            helpers,
            copy,
        }) => {
            assert_eq!(copy, 0);
            assert!(failed == 3 || helpers.contains(&3));
        }
        other => panic!("expected a repair mismatch, got {other:?}"),
    }
    assert!(sweep_reconstructions(&code, 3).is_err());
}

#[test]
fn golden_text_dump() {
    let code = build_glued(3, 1, gf11(), &opts(7)).unwrap();
    let text = code.to_text();
    let path = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/glued_n3_khat1_seed7.txt"
    );
    if std::env::var_os("REGEN_BLESS").is_some() {
        std::fs::write(path, &text).unwrap();
    }
    let golden =
        std::fs::read_to_string(path).expect("golden file; run with REGEN_BLESS=1 to create");
    assert_eq!(text, golden);
}
