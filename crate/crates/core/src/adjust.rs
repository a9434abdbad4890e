//! Correction strategies: turn a pair of distributions into pointwise
//! dominating (outer-approximating) distributions whose conjunction is a
//! possibility measure.
//!
//! Adjustments only ever move values upwards, so the corrected model stays
//! consistent with the original information. Downward corrections exist
//! too but are exposed only as [`inner_approximation`], never mixed into
//! the upward strategies.

use crate::closure::{is_possibility_pairwise, orient_violating_pair, pointwise_min_distribution};
use crate::distribution::PossibilityDistribution;
use crate::error::Error;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Comonotone,
    Pairwise,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Comonotone => "comonotone",
            Strategy::Pairwise => "pairwise",
        }
    }
}

/// One raised value: which element, which distribution (1 or 2), and the
/// old and new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Change {
    pub element: String,
    pub which: u8,
    pub old: Rational,
    pub new: Rational,
}

/// The outcome of a correction strategy. Outputs dominate the inputs
/// pointwise and their conjunction passes the pairwise possibility test.
#[derive(Clone, Debug)]
pub struct Adjustment {
    pub pi1_out: PossibilityDistribution,
    pub pi2_out: PossibilityDistribution,
    pub strategy: Strategy,
    /// Sum of all raises across both distributions; a descriptive
    /// statistic, not a claim of minimality.
    pub total_increase: Rational,
    pub changed: Vec<Change>,
}

struct Editor {
    v1: Vec<Rational>,
    v2: Vec<Rational>,
    changed: Vec<Change>,
    labels: Vec<String>,
}

impl Editor {
    fn new(pi1: &PossibilityDistribution, pi2: &PossibilityDistribution) -> Self {
        Editor {
            v1: pi1.values().to_vec(),
            v2: pi2.values().to_vec(),
            changed: Vec::new(),
            labels: pi1.space().labels().to_vec(),
        }
    }

    fn raise(&mut self, which: u8, i: usize, to: &Rational) {
        let slot = if which == 1 {
            &mut self.v1[i]
        } else {
            &mut self.v2[i]
        };
        debug_assert!(*slot <= *to);
        if *slot == *to {
            return;
        }
        self.changed.push(Change {
            element: self.labels[i].clone(),
            which,
            old: slot.clone(),
            new: to.clone(),
        });
        *slot = to.clone();
    }

    fn finish(
        self,
        pi1: &PossibilityDistribution,
        strategy: Strategy,
    ) -> Result<Adjustment, Error> {
        let total_increase = self
            .changed
            .iter()
            .map(|c| &c.new - &c.old)
            .sum();
        let space = pi1.space().clone();
        Ok(Adjustment {
            pi1_out: PossibilityDistribution::new(space.clone(), self.v1)?,
            pi2_out: PossibilityDistribution::new(space, self.v2)?,
            strategy,
            total_increase,
            changed: self.changed,
        })
    }
}

/// If some element carries 1 in both distributions the inputs are
/// returned unchanged; otherwise both are raised to 1 at the element
/// maximizing the pointwise minimum (ties towards the smallest label
/// index).
pub fn ensure_norm_point(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<(PossibilityDistribution, PossibilityDistribution), Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let mut ed = Editor::new(pi1, pi2);
    norm_point_step(&mut ed);
    let adj = ed.finish(pi1, Strategy::Comonotone)?;
    Ok((adj.pi1_out, adj.pi2_out))
}

fn norm_point_step(ed: &mut Editor) {
    let n = ed.v1.len();
    if (0..n).any(|i| ed.v1[i].is_one() && ed.v2[i].is_one()) {
        return;
    }
    let star = (0..n)
        .max_by(|&a, &b| {
            Rational::min_ref(&ed.v1[a], &ed.v2[a])
                .cmp(Rational::min_ref(&ed.v1[b], &ed.v2[b]))
                .then(b.cmp(&a))
        })
        .expect("non-empty space");
    let one = Rational::one();
    ed.raise(1, star, &one);
    ed.raise(2, star, &one);
}

/// Comonotone repair: after securing a norm point, order the elements by
/// ascending pointwise minimum (ties by ascending maximum, then label
/// index) and replace each distribution by its running maximum along that
/// order. The outputs share a non-decreasing ordering, so their
/// conjunction is a possibility measure. Already-comonotone inputs come
/// back unchanged.
pub fn adjust_comonotone(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<Adjustment, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let mut ed = Editor::new(pi1, pi2);
    norm_point_step(&mut ed);

    let n = ed.v1.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        let key = |i: usize| {
            (
                Rational::min_ref(&ed.v1[i], &ed.v2[i]).clone(),
                Rational::max_ref(&ed.v1[i], &ed.v2[i]).clone(),
                i,
            )
        };
        key(a).cmp(&key(b))
    });

    for which in [1u8, 2u8] {
        let mut running = Rational::zero();
        for &i in &order {
            let current = if which == 1 { &ed.v1[i] } else { &ed.v2[i] };
            if *current > running {
                running = current.clone();
            } else {
                let to = running.clone();
                ed.raise(which, i, &to);
            }
        }
    }
    ed.finish(pi1, Strategy::Comonotone)
}

/// Pairwise repair: after securing a norm point, repeatedly take the
/// first violating pair (label order) in its canonical orientation and
/// raise whichever of the two low entries needs the smaller increase to
/// reach `min(π1(x2), π2(x1))`, the smallest raise that settles that
/// pair. Every raise moves a value onto one already present, so the value
/// set never grows and the loop terminates.
pub fn adjust_pairwise(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<Adjustment, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    let mut ed = Editor::new(pi1, pi2);
    norm_point_step(&mut ed);

    let space = pi1.space().clone();
    let n = space.n();
    let iteration_bound = 2 * n * n * n + 2;
    let mut iterations = 0usize;
    loop {
        let current1 = PossibilityDistribution::new(space.clone(), ed.v1.clone())?;
        let current2 = PossibilityDistribution::new(space.clone(), ed.v2.clone())?;
        let (ok, pairs) = is_possibility_pairwise(&current1, &current2)?;
        if ok {
            break;
        }
        iterations += 1;
        assert!(
            iterations <= iteration_bound,
            "pairwise repair failed to terminate"
        );
        let (x1, x2) = orient_violating_pair(&current1, &current2, pairs[0]);
        let target = Rational::min_ref(current1.value(x2), current2.value(x1)).clone();
        let need1 = &target - current1.value(x1);
        let need2 = &target - current2.value(x2);
        if need1 <= need2 {
            ed.raise(1, x1, &target);
        } else {
            ed.raise(2, x2, &target);
        }
    }
    ed.finish(pi1, Strategy::Pairwise)
}

/// The pointwise minimum as a distribution, when it is normalized; its
/// possibility measure is dominated by the conjunction, making it an
/// inner approximation.
#[derive(Clone, Debug)]
pub enum InnerApproximation {
    Distribution(PossibilityDistribution),
    /// The pointwise minimum never reaches 1; its maximum is reported.
    Unnormalized { max: Rational },
}

pub fn inner_approximation(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
) -> Result<InnerApproximation, Error> {
    let min = pointwise_min_distribution(pi1, pi2)?;
    if min.normed {
        Ok(InnerApproximation::Distribution(
            PossibilityDistribution::new(pi1.space().clone(), min.values)?,
        ))
    } else {
        let max = min.values.iter().max().expect("non-empty space").clone();
        Ok(InnerApproximation::Unnormalized { max })
    }
}
