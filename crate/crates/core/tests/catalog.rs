use fixed_hooks::catalog::*;
use fixed_hooks::oracle::{count_fixed_by_hook, count_fixed_by_part, count_hooks_of_size, HookQuery};
use fixed_hooks::partition::{Family, Partitions};
use fixed_hooks::verify::{compare, run_case, IdentityCase, Status};

#[test]
fn first_column_forms_agree() {
    for k in 1..=6 {
        for h in -3..=k as i64 + 1 {
            let a = gf_fixed_by_part_m1(k, h, 50).unwrap();
            assert_eq!(a, gf_fixed_by_part_m1_row_form(k, h, 50).unwrap(), "k={k} h={h}");
            assert_eq!(a, gf_mfixed_by_part(1, k, h, 50).unwrap(), "k={k} h={h}");
            assert_eq!(gf_fixed_by_hook_m1(k, h, 50).unwrap(), gf_mfixed_by_hook(1, k, h, 50).unwrap());
        }
    }
}

#[test]
fn part_forms_agree_in_every_column() {
    for m in 1..=4 {
        for k in m..=7 {
            for h in -3..k as i64 + 2 {
                assert_eq!(
                    gf_mfixed_by_part(m, k, h, 40).unwrap(),
                    gf_mfixed_by_part_row_form(m, k, h, 40).unwrap(),
                    "m={m} k={k} h={h}"
                );
            }
        }
    }
}

#[test]
fn fixed_hooks_beyond_the_part_are_counted() {
    // h >= k still has witnesses, e.g. (1, 1) with h = 1 in column 1
    let s = gf_fixed_by_part_m1(1, 1, 10).unwrap();
    assert!(!s.is_zero());
    assert_eq!(s.coeff(2), Some(count_fixed_by_part(HookQuery::new(2, 1, 1, 1), Family::All).unwrap() as i64));
    assert_eq!(s.coeff(2), Some(1));
}

#[test]
fn hook_sized_series_against_enumeration() {
    for m in 1..=3 {
        for k in 1..=5 {
            for h in -2..k as i64 {
                let s = gf_mfixed_by_hook(m, k, h, 22).unwrap();
                let mm = compare(&s, 22, "fixed-by-hook", |n| count_fixed_by_hook(HookQuery::new(n, m, h, k), Family::All))
                    .unwrap();
                assert_eq!(mm, None, "m={m} k={k} h={h}");
            }
        }
    }
}

#[test]
fn builders_are_consistent_under_truncation() {
    let samples = [
        (TheoremId::T11ClosedForm, Params::new(Some(2), None, None)),
        (TheoremId::T12ClosedForm, Params::new(Some(2), None, Some(-2))),
        (TheoremId::T13Shifted, Params::new(Some(2), Some(3), Some(0))),
        (TheoremId::T14HooksOfSizeK, Params::new(Some(3), Some(4), None)),
        (TheoremId::MFixedByPart, Params::new(Some(2), Some(4), Some(-1))),
        (TheoremId::OddBySize, Params::new(Some(2), Some(5), Some(1))),
        (TheoremId::DistinctBySizeVariantB, Params::new(Some(2), Some(4), Some(0))),
        (TheoremId::MFixedByHook, Params::new(Some(3), Some(3), Some(-2))),
        (TheoremId::OddByHook, Params::new(Some(2), Some(4), Some(0))),
        (TheoremId::DistinctByHook, Params::new(Some(1), Some(5), Some(1))),
        (TheoremId::OddDistinctByHook, Params::new(Some(3), Some(4), Some(0))),
        (TheoremId::OddDistinctTotal, Params::new(None, Some(3), None)),
    ];
    for (t, p) in samples {
        for v in [Variant::Stated, Variant::Rederived] {
            let long = build(t, p, 45, Some(v)).unwrap();
            let short = build(t, p, 25, Some(v)).unwrap();
            assert_eq!(long.order(), 45);
            assert_eq!(long.truncate(25).unwrap(), short, "{t} {v}");
        }
    }
}

#[test]
fn zeroth_column_hooks_sum_to_the_closed_form() {
    // partitions with a 0-fixed hook in column m, summed over the hook size
    for m in 1..=3 {
        let closed = gf_t11_closed_form(m, 24).unwrap();
        let mut total = fixed_hooks::LaurentSeries::zero(24);
        for k in 1..=24 {
            total = total.checked_add(&gf_mfixed_by_hook(m, k, 0, 24).unwrap()).unwrap();
        }
        assert_eq!(closed, total, "m={m}");
        for n in 0..16 {
            let having = Partitions::new(n).filter(|p| p.fixed_hook_rows(m, 0).next().is_some()).count();
            assert_eq!(closed.coeff(n as i64), Some(having as i64));
        }
    }
}

#[test]
fn hooks_of_size_k_sum_over_h() {
    for m in 1..=3 {
        for k in 1..=5 {
            let t14 = gf_t14_hooks_of_size_k(m, k, 24).unwrap();
            assert!(t14.negative_terms().is_empty());
            assert_eq!(t14, sum_mfixed_by_hook_over_h(m, k, 24).unwrap(), "m={m} k={k}");
        }
    }
}

#[test]
fn summing_by_hook_over_columns_counts_all_hooks() {
    for k in 1..=3 {
        for family in [Family::All, Family::Odd, Family::Distinct] {
            let s = sum_by_hook_over_m_h(family, k, 20, Variant::Rederived).unwrap();
            for n in 0..20 {
                assert_eq!(s.coeff(n as i64), Some(count_hooks_of_size(n, k, None, family) as i64), "{family} k={k} n={n}");
            }
        }
    }
}

#[test]
fn stated_readings_that_disagree_with_enumeration() {
    let stated = |t, m, k, h| {
        run_case(IdentityCase::new(t, Params::new(Some(m), Some(k), Some(h)), 25, Some(Variant::Stated))).status
    };
    let rederived = |t, m, k, h| {
        run_case(IdentityCase::new(t, Params::new(Some(m), Some(k), Some(h)), 25, Some(Variant::Rederived))).status
    };
    assert_eq!(stated(TheoremId::OddBySize, 2, 3, 1), Status::Fail);
    assert_eq!(rederived(TheoremId::OddBySize, 2, 3, 1), Status::Pass);
    assert_eq!(stated(TheoremId::DistinctBySize, 1, 3, 0), Status::Fail);
    assert_eq!(rederived(TheoremId::DistinctBySizeVariantB, 1, 3, 0), Status::Pass);
    assert_eq!(stated(TheoremId::OddDistinctByHook, 1, 1, 0), Status::Fail);
    assert_eq!(rederived(TheoremId::OddDistinctByHook, 1, 1, 0), Status::Pass);
    // odd columns are untouched by the OddBySize correction
    assert_eq!(stated(TheoremId::OddBySize, 1, 3, 0), Status::Pass);
}
