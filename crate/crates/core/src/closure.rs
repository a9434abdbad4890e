//! The decision layer: is the conjunction of two possibility measures a
//! possibility measure, and is its natural extension one, with
//! constructive witnesses when it is not.
//!
//! Three equivalent routes decide whether the conjunction is maxitive —
//! an all-events scan, an all-pairs scan, and the game/line-envelope
//! criterion — and they are cross-checked against each other in the
//! property suites.

use crate::capacity::{
    conjunction, is_maxitive, is_two_alternating, possibility_measure, UpperProbability,
};
use crate::credal::{
    avoids_sure_loss_lp, natural_extension_table, union_is_convex, CredalPolytope,
    MAX_VERTEX_ENUM,
};
use crate::distribution::{MassFunction, PossibilityDistribution};
use crate::error::Error;
use crate::game::{envelope_is_monotone, line_diagram};
use crate::rational::Rational;

/// The pointwise minimum of the two distributions, together with the
/// maxitive set function it induces and whether it is normalized.
#[derive(Clone, Debug)]
pub struct PointwiseMin {
    pub values: Vec<Rational>,
    /// `max_{x∈A} min(π1, π2)(x)` indexed by event mask.
    pub table: Vec<Rational>,
    /// Whether the maximum of the minimum distribution is exactly 1.
    pub normed: bool,
}

pub fn pointwise_min_distribution(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<PointwiseMin, Error> {
    let values = pi1.pointwise_min(pi2)?;
    let size = pi1.space().num_events();
    let mut table = vec![Rational::zero(); size];
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        table[mask] = Rational::max_ref(&table[mask & (mask - 1)], &values[low]).clone();
    }
    let normed = table[size - 1].is_one();
    Ok(PointwiseMin {
        values,
        table,
        normed,
    })
}

/// A common ordering along which both distributions are non-decreasing,
/// if one exists. Sorting by the value pairs finds it: an ordering exists
/// iff no two elements are strictly discordant.
pub fn comonotone_sufficient(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<Option<Vec<usize>>, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let n = pi1.space().n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        (pi1.value(a), pi2.value(a), a).cmp(&(pi1.value(b), pi2.value(b), b))
    });
    for w in order.windows(2) {
        if pi2.value(w[0]) > pi2.value(w[1]) {
            return Ok(None);
        }
    }
    Ok(Some(order))
}

/// Pointwise dominance between the two distributions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specificity {
    /// `π1 <= π2` everywhere: the conjunction is the first measure.
    FirstLeqSecond,
    /// `π2 <= π1` everywhere.
    SecondLeqFirst,
    Equal,
}

/// Reports pointwise dominance, or `None` when the distributions are
/// incomparable.
pub fn specificity_sufficient(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<Option<Specificity>, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let le = pi1.values().iter().zip(pi2.values()).all(|(a, b)| a <= b);
    let ge = pi1.values().iter().zip(pi2.values()).all(|(a, b)| a >= b);
    Ok(match (le, ge) {
        (true, true) => Some(Specificity::Equal),
        (true, false) => Some(Specificity::FirstLeqSecond),
        (false, true) => Some(Specificity::SecondLeqFirst),
        (false, false) => None,
    })
}

/// The pairwise minimax test: the conjunction is a possibility measure
/// iff, for every two-element event, the minimum of the two maxima equals
/// the maximum of the pointwise minima. Violating pairs are returned in
/// label order; ties satisfy the equality and never violate.
pub fn is_possibility_pairwise(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<(bool, Vec<(usize, usize)>), Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let n = pi1.space().n();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if pair_violates(pi1, pi2, i, j) {
                violations.push((i, j));
            }
        }
    }
    Ok((violations.is_empty(), violations))
}

fn pair_violates(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    i: usize,
    j: usize,
) -> bool {
    let min_of_maxes = Rational::min_ref(
        Rational::max_ref(pi1.value(i), pi1.value(j)),
        Rational::max_ref(pi2.value(i), pi2.value(j)),
    );
    let max_of_mins = Rational::max_ref(
        Rational::min_ref(pi1.value(i), pi2.value(i)),
        Rational::min_ref(pi1.value(j), pi2.value(j)),
    );
    min_of_maxes != max_of_mins
}

/// Orients a violating pair so that `π1(x1) < π1(x2)`, `π2(x1) > π2(x2)`,
/// `π1(x1) < π2(x1)` and `π1(x2) > π2(x2)` — the pattern every violating
/// pair matches in exactly one orientation.
pub fn orient_violating_pair(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    pair: (usize, usize),
) -> (usize, usize) {
    let (i, j) = pair;
    let left_case = |x1: usize, x2: usize| {
        pi1.value(x1) < pi1.value(x2)
            && pi2.value(x1) > pi2.value(x2)
            && pi1.value(x1) < pi2.value(x1)
            && pi1.value(x2) > pi2.value(x2)
    };
    if left_case(i, j) {
        (i, j)
    } else {
        debug_assert!(left_case(j, i), "pair does not violate the pairwise test");
        (j, i)
    }
}

/// The all-events test, exponential and used as the oracle for the
/// pairwise and game routes.
pub fn is_possibility_allevents(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<bool, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let size = pi1.space().num_events();
    let mut max1 = vec![Rational::zero(); size];
    let mut max2 = vec![Rational::zero(); size];
    let min = pointwise_min_distribution(pi1, pi2)?;
    for mask in 1..size {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        max1[mask] = Rational::max_ref(&max1[rest], pi1.value(low)).clone();
        max2[mask] = Rational::max_ref(&max2[rest], pi2.value(low)).clone();
        if *Rational::min_ref(&max1[mask], &max2[mask]) != min.table[mask] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The game route: the conjunction is a possibility measure iff every
/// pair of intersecting lines in the full-space diagram is sloped the
/// same way.
pub fn is_possibility_by_games(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<bool, Error> {
    let d = line_diagram(pi1, pi2, pi1.space().full_event())?;
    Ok(envelope_is_monotone(&d))
}

/// Computes the natural extension on every event and reports whether it
/// is maxitive (hence a possibility measure).
pub fn natext_is_possibility(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<(bool, UpperProbability), Error> {
    let conj = conjunction(&possibility_measure(pi1), &possibility_measure(pi2))?;
    let table = natural_extension_table(&CredalPolytope::of(&conj))?;
    Ok((is_maxitive(&table), table))
}

/// For strictly positive distributions the pairwise test already decides
/// whether the natural extension is a possibility measure; with zeros the
/// shortcut is inapplicable and `None` is returned.
pub fn strictly_positive_shortcut(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<Option<bool>, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    if !pi1.is_strictly_positive() || !pi2.is_strictly_positive() {
        return Ok(None);
    }
    Ok(Some(is_possibility_pairwise(pi1, pi2)?.0))
}

/// First element (label order) where both distributions equal 1, if any.
/// Without one, neither the conjunction nor its natural extension can be
/// a possibility measure.
pub fn necessary_norm_point(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<Option<usize>, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    Ok((0..pi1.space().n()).find(|&i| pi1.value(i).is_one() && pi2.value(i).is_one()))
}

/// Builds the three-point mass function witnessing that the natural
/// extension is not a possibility measure: supported on the oriented
/// violating pair plus a norm point, dominated by the conjunction, with
/// `Q({x1, x2})` strictly above both singleton extensions.
pub fn non_possibility_witness(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    x1: usize,
    x2: usize,
) -> Result<MassFunction, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let fail = |reason: &str| Error::WitnessPrecondition {
        reason: reason.to_string(),
    };
    if !pi1.is_strictly_positive() || !pi2.is_strictly_positive() {
        return Err(fail("both distributions must be strictly positive"));
    }
    let Some(star) = necessary_norm_point(pi1, pi2)? else {
        return Err(fail("no element carries value 1 in both distributions"));
    };
    let a = pi1.value(x1);
    let b = pi1.value(x2);
    let c = pi2.value(x1);
    let d = pi2.value(x2);
    if !(a < b && c > d && a < c && b > d) {
        return Err(fail(
            "pair is not oriented to the violating pattern (no dominating row or column)",
        ));
    }
    debug_assert!(star != x1 && star != x2);

    let t = Rational::min_ref(b, c).clone();
    let (q1, q2) = if (a + d) <= t {
        (a.clone(), d.clone())
    } else {
        (a.clone(), &t - a)
    };
    let q_star = &(&Rational::one() - &q1) - &q2;

    // The three inequalities that make Q dominated by the conjunction.
    if !(q1 <= *a && q2 <= *d && &q1 + &q2 <= t) {
        return Err(fail("constructed masses violate the domination bounds"));
    }
    if &q1 + &q2 <= *Rational::max_ref(a, d) {
        return Err(fail("constructed mass does not exceed the singleton bound"));
    }

    let mut masses = vec![Rational::zero(); pi1.space().n()];
    masses[x1] = q1;
    masses[x2] = q2;
    masses[star] = q_star;
    MassFunction::new(pi1.space().clone(), masses)
}

/// Everything the analysis concludes about one pair of distributions.
/// Truth values are mutually consistent with the implication structure:
/// possibility implies 2-alternating implies coherent, and a convex union
/// implies 2-alternating.
#[derive(Clone, Debug)]
pub struct ClosureDiagnosis {
    pub avoids_sure_loss: bool,
    pub coherent: bool,
    pub two_alternating: bool,
    /// Populated only when the convexity check is requested and the space
    /// is small enough to enumerate vertices.
    pub union_convex: Option<bool>,
    pub conjunction_is_possibility: bool,
    pub natext_is_possibility: bool,
    /// Violating pairs of the pairwise test, each oriented to the
    /// canonical violating pattern.
    pub violating_pairs: Vec<(String, String)>,
    pub normalization_point: Option<String>,
    pub witnesses: Option<Witnesses>,
}

/// Mass functions backing the verdicts: a feasible point when sure loss
/// is avoided, and the three-point witness when the natural extension
/// provably fails to be a possibility measure.
#[derive(Clone, Debug, Default)]
pub struct Witnesses {
    pub feasible: Option<MassFunction>,
    pub non_possibility: Option<MassFunction>,
}

/// Runs every check. When the pairwise test already proves the
/// conjunction is a possibility measure, the downstream verdicts follow
/// without solving any program; otherwise coherence and the natural
/// extension are decided by one shared sweep of exact programs.
pub fn diagnose(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    check_convexity: bool,
) -> Result<ClosureDiagnosis, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let space = pi1.space();
    let m1 = possibility_measure(pi1);
    let m2 = possibility_measure(pi2);
    let conj = conjunction(&m1, &m2)?;
    let (is_poss, raw_pairs) = is_possibility_pairwise(pi1, pi2)?;
    let norm_point = necessary_norm_point(pi1, pi2)?;

    let mut witnesses = Witnesses::default();
    let (avoids_sure_loss, coherent, two_alternating, natext_poss);
    if is_poss {
        // A maxitive conjunction is a possibility measure, hence coherent,
        // 2-alternating, and equal to its natural extension. The norm
        // point carries a feasible degenerate mass.
        avoids_sure_loss = true;
        coherent = true;
        two_alternating = true;
        natext_poss = true;
        let star = norm_point.expect("a possibility measure has a norm point");
        witnesses.feasible = Some(MassFunction::degenerate(space.clone(), star));
    } else {
        let (asl, feasible) = avoids_sure_loss_lp(&CredalPolytope::of(&conj));
        avoids_sure_loss = asl;
        witnesses.feasible = feasible;
        two_alternating = is_two_alternating(&conj).0;
        if asl {
            let table = natural_extension_table(&CredalPolytope::of(&conj))?;
            coherent = table == conj;
            natext_poss = is_maxitive(&table);
        } else {
            coherent = false;
            natext_poss = false;
        }
    }

    if !raw_pairs.is_empty()
        && pi1.is_strictly_positive()
        && pi2.is_strictly_positive()
        && norm_point.is_some()
    {
        let (x1, x2) = orient_violating_pair(pi1, pi2, raw_pairs[0]);
        witnesses.non_possibility = non_possibility_witness(pi1, pi2, x1, x2).ok();
    }

    let union_convex = if check_convexity && space.n() <= MAX_VERTEX_ENUM {
        Some(union_is_convex(&m1, &m2)?.0)
    } else {
        None
    };

    let violating_pairs = raw_pairs
        .iter()
        .map(|&p| {
            let (x1, x2) = orient_violating_pair(pi1, pi2, p);
            (space.label(x1).to_string(), space.label(x2).to_string())
        })
        .collect();

    Ok(ClosureDiagnosis {
        avoids_sure_loss,
        coherent,
        two_alternating,
        union_convex,
        conjunction_is_possibility: is_poss,
        natext_is_possibility: natext_poss,
        violating_pairs,
        normalization_point: norm_point.map(|i| space.label(i).to_string()),
        witnesses: if witnesses.feasible.is_none() && witnesses.non_possibility.is_none() {
            None
        } else {
            Some(witnesses)
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Space;

    fn space(labels: &[&str]) -> Space {
        Space::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn dist(sp: &Space, vals: &[&str]) -> PossibilityDistribution {
        PossibilityDistribution::new(sp.clone(), vals.iter().map(|s| s.parse().unwrap()).collect())
            .unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn pointwise_min_cases() {
        let sp = space(&["d", "h", "n"]);
        let medical = pointwise_min_distribution(
            &dist(&sp, &["1", "0.5", "0.2"]),
            &dist(&sp, &["1", "0.3", "0.4"]),
        )
        .unwrap();
        assert_eq!(medical.values, vec![r("1"), r("0.3"), r("0.2")]);
        assert!(medical.normed);

        let sp2 = space(&["1", "2"]);
        let unnormed = pointwise_min_distribution(
            &dist(&sp2, &["1", "0.3"]),
            &dist(&sp2, &["0.5", "1"]),
        )
        .unwrap();
        assert_eq!(unnormed.values, vec![r("0.5"), r("0.3")]);
        assert!(!unnormed.normed);

        let pi = dist(&sp, &["1", "0.4", "0.7"]);
        let same = pointwise_min_distribution(&pi, &pi).unwrap();
        assert_eq!(same.values, pi.values());
    }

    #[test]
    fn comonotone_orderings() {
        let sp = space(&["1", "2", "3"]);
        let order = comonotone_sufficient(
            &dist(&sp, &["1", "0.5", "0.7"]),
            &dist(&sp, &["1", "0.6", "0.6"]),
        )
        .unwrap();
        assert_eq!(order, Some(vec![1, 2, 0]));

        let none = comonotone_sufficient(
            &dist(&sp, &["1", "0.9", "0.8"]),
            &dist(&sp, &["1", "0.5", "0.6"]),
        )
        .unwrap();
        assert_eq!(none, None);

        let flat = comonotone_sufficient(
            &dist(&sp, &["1", "1", "1"]),
            &dist(&sp, &["1", "1", "1"]),
        )
        .unwrap();
        assert!(flat.is_some());
    }

    #[test]
    fn specificity_cases() {
        let sp = space(&["1", "2", "3"]);
        assert_eq!(
            specificity_sufficient(
                &dist(&sp, &["1", "0.9", "0.8"]),
                &dist(&sp, &["1", "0.5", "0.6"]),
            )
            .unwrap(),
            Some(Specificity::SecondLeqFirst)
        );
        let pi = dist(&sp, &["1", "0.4", "0.2"]);
        assert_eq!(
            specificity_sufficient(&pi, &pi).unwrap(),
            Some(Specificity::Equal)
        );
        assert_eq!(
            specificity_sufficient(
                &dist(&sp, &["1", "0.5", "0.7"]),
                &dist(&sp, &["1", "0.6", "0.6"]),
            )
            .unwrap(),
            None
        );
    }

    #[test]
    fn pairwise_test_and_orientation() {
        let sp = space(&["1", "2", "3"]);
        let (ok, _) = is_possibility_pairwise(
            &dist(&sp, &["1", "0.5", "0.7"]),
            &dist(&sp, &["1", "0.6", "0.6"]),
        )
        .unwrap();
        assert!(ok);

        let pi1 = dist(&sp, &["1", "0.5", "0.5"]);
        let pi2 = dist(&sp, &["0.5", "1", "0"]);
        let (ok, pairs) = is_possibility_pairwise(&pi1, &pi2).unwrap();
        assert!(!ok);
        assert_eq!(pairs, vec![(0, 1)]);
        assert_eq!(orient_violating_pair(&pi1, &pi2, (0, 1)), (1, 0));

        let sp1 = space(&["only"]);
        let one = dist(&sp1, &["1"]);
        assert!(is_possibility_pairwise(&one, &one).unwrap().0);
    }

    #[test]
    fn three_routes_agree() {
        let sp = space(&["1", "2", "3"]);
        let cases = [
            (["1", "0.5", "0.7"], ["1", "0.6", "0.6"]),
            (["1", "0.5", "0.5"], ["0.5", "1", "0"]),
            (["0.8", "0.2", "1"], ["0.2", "0.9", "1"]),
            (["1", "1", "0"], ["1", "0", "1"]),
        ];
        for (v1, v2) in cases {
            let pi1 = dist(&sp, &v1);
            let pi2 = dist(&sp, &v2);
            let pairwise = is_possibility_pairwise(&pi1, &pi2).unwrap().0;
            let allevents = is_possibility_allevents(&pi1, &pi2).unwrap();
            let games = is_possibility_by_games(&pi1, &pi2).unwrap();
            let maxitive = is_maxitive(
                &conjunction(&possibility_measure(&pi1), &possibility_measure(&pi2)).unwrap(),
            );
            assert_eq!(pairwise, allevents);
            assert_eq!(pairwise, games);
            assert_eq!(pairwise, maxitive);
        }
    }

    #[test]
    fn natext_possibility_cases() {
        let sp = space(&["1", "2", "3"]);
        let (poss, table) = natext_is_possibility(
            &dist(&sp, &["1", "1", "0"]),
            &dist(&sp, &["1", "0", "1"]),
        )
        .unwrap();
        assert!(poss);
        for e in sp.events() {
            let expect = if e.contains(0) { r("1") } else { r("0") };
            assert_eq!(*table.get(e), expect);
        }

        let spm = space(&["d", "h", "n"]);
        let (poss, table) = natext_is_possibility(
            &dist(&spm, &["1", "0.5", "0.2"]),
            &dist(&spm, &["1", "0.3", "0.4"]),
        )
        .unwrap();
        assert!(!poss);
        assert_eq!(
            *table.get(spm.event_from_labels(["h", "n"]).unwrap()),
            r("0.4")
        );

        let pi = dist(&sp, &["1", "0.4", "0.7"]);
        assert!(natext_is_possibility(&pi, &pi).unwrap().0);

        let sp2 = space(&["1", "2"]);
        assert!(matches!(
            natext_is_possibility(&dist(&sp2, &["1", "0.3"]), &dist(&sp2, &["0.5", "1"])),
            Err(Error::SureLoss)
        ));
    }

    #[test]
    fn shortcut_only_for_positive_inputs() {
        let spm = space(&["d", "h", "n"]);
        let medical = strictly_positive_shortcut(
            &dist(&spm, &["1", "0.5", "0.2"]),
            &dist(&spm, &["1", "0.3", "0.4"]),
        )
        .unwrap();
        assert_eq!(medical, Some(false));

        let sp = space(&["1", "2", "3"]);
        let zeros = strictly_positive_shortcut(
            &dist(&sp, &["1", "1", "0"]),
            &dist(&sp, &["1", "0", "1"]),
        )
        .unwrap();
        assert_eq!(zeros, None);

        let comono = strictly_positive_shortcut(
            &dist(&sp, &["1", "0.5", "0.7"]),
            &dist(&sp, &["1", "0.6", "0.6"]),
        )
        .unwrap();
        assert_eq!(comono, Some(true));
    }

    #[test]
    fn norm_points() {
        let sp = Space::new((1..=8).map(|i| i.to_string()).collect()).unwrap();
        let pi1 = dist(&sp, &["1", "0.9", "0.7", "0.6", "0.5", "0.4", "0.3", "0.1"]);
        let pi2 = dist(&sp, &["0.8", "0.2", "1", "0.6", "0.1", "0.2", "0.3", "0.9"]);
        assert_eq!(necessary_norm_point(&pi1, &pi2).unwrap(), None);

        let spm = space(&["d", "h", "n"]);
        assert_eq!(
            necessary_norm_point(
                &dist(&spm, &["1", "0.5", "0.2"]),
                &dist(&spm, &["1", "0.3", "0.4"]),
            )
            .unwrap(),
            Some(0)
        );

        let pi = dist(&spm, &["0.3", "1", "0.9"]);
        assert_eq!(necessary_norm_point(&pi, &pi).unwrap(), Some(1));
    }

    #[test]
    fn witness_construction() {
        let sp = space(&["1", "2", "3"]);
        let pi1 = dist(&sp, &["0.2", "0.6", "1"]);
        let pi2 = dist(&sp, &["0.5", "0.3", "1"]);
        let q = non_possibility_witness(&pi1, &pi2, 0, 1).unwrap();
        assert_eq!(q.masses(), &[r("0.2"), r("0.3"), r("0.5")][..]);

        // Dominated by the conjunction on every event, and strictly above
        // the singleton bound on the pair.
        let conj = conjunction(&possibility_measure(&pi1), &possibility_measure(&pi2)).unwrap();
        let sums = q.event_table();
        for e in sp.events() {
            assert!(sums[e.mask() as usize] <= *conj.get(e));
        }
        assert!(q.of(sp.event(0b011).unwrap()) > r("0.3"));

        // Inapplicable without a violating pattern.
        assert!(matches!(
            non_possibility_witness(&pi1, &pi2, 0, 2),
            Err(Error::WitnessPrecondition { .. })
        ));

        // The medical pair oriented as (n, h): case 2 of the construction.
        let spm = space(&["d", "h", "n"]);
        let m1 = dist(&spm, &["1", "0.5", "0.2"]);
        let m2 = dist(&spm, &["1", "0.3", "0.4"]);
        let q = non_possibility_witness(&m1, &m2, 2, 1).unwrap();
        assert_eq!(q.masses(), &[r("0.6"), r("0.2"), r("0.2")][..]);
        assert!(q.of(spm.event_from_labels(["h", "n"]).unwrap()) > r("0.3"));
    }

    #[test]
    fn diagnose_examples() {
        let sp2 = space(&["1", "2"]);
        let d = diagnose(
            &dist(&sp2, &["1", "0.3"]),
            &dist(&sp2, &["0.5", "1"]),
            false,
        )
        .unwrap();
        assert!(!d.avoids_sure_loss);
        assert!(!d.coherent);
        assert!(!d.conjunction_is_possibility);
        assert!(!d.natext_is_possibility);
        assert!(d.witnesses.is_none());

        let sp4 = space(&["1", "2", "3", "4"]);
        let d = diagnose(
            &dist(&sp4, &["0.3", "0.4", "0.6", "1"]),
            &dist(&sp4, &["0.3", "0.6", "0.4", "1"]),
            false,
        )
        .unwrap();
        assert!(d.avoids_sure_loss);
        assert!(d.coherent);
        assert!(!d.two_alternating);
        assert!(!d.conjunction_is_possibility);

        let sp3 = space(&["1", "2", "3"]);
        let d = diagnose(
            &dist(&sp3, &["1", "0.5", "0.7"]),
            &dist(&sp3, &["1", "0.6", "0.6"]),
            true,
        )
        .unwrap();
        assert!(d.conjunction_is_possibility);
        assert!(d.natext_is_possibility);
        assert_eq!(d.union_convex, Some(false));
        assert!(d.violating_pairs.is_empty());
        assert_eq!(d.normalization_point.as_deref(), Some("1"));
    }
}
