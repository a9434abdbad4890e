//! Zero-sum 2×m games built from a pair of possibility distributions, and
//! the line-envelope analysis behind the graphical method.
//!
//! For an event `A`, the row player picks a distribution (α in {1,2}), the
//! column player picks an element of `A`, and the payoff to the row player
//! is the negated possibility degree. The conjunction restricted to `A` is
//! maxitive exactly when this game has a pure equilibrium.

use crate::distribution::PossibilityDistribution;
use crate::error::Error;
use crate::rational::Rational;
use crate::space::Event;

/// A two-row payoff matrix; entries are payoffs to the maximizing row
/// player. Column labels are carried along when the game was built from
/// distributions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PayoffMatrix {
    rows: [Vec<Rational>; 2],
    labels: Vec<String>,
}

impl PayoffMatrix {
    pub fn new(row1: Vec<Rational>, row2: Vec<Rational>) -> Result<Self, Error> {
        if row1.is_empty() || row1.len() != row2.len() {
            return Err(Error::BadMatrixShape);
        }
        Ok(PayoffMatrix {
            rows: [row1, row2],
            labels: Vec::new(),
        })
    }

    pub fn cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.rows[row][col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.rows[row]
    }

    /// Column labels, empty for matrices given numerically.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

/// The game for event `A`: columns are the elements of `A` in label order,
/// entries the negated possibility values.
pub fn build_game(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    a: Event,
) -> Result<PayoffMatrix, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    if a.is_empty() {
        return Err(Error::EmptyEvent);
    }
    let members: Vec<usize> = a.members().filter(|&i| i < pi1.space().n()).collect();
    let row = |pi: &PossibilityDistribution| members.iter().map(|&i| -pi.value(i)).collect();
    Ok(PayoffMatrix {
        rows: [row(pi1), row(pi2)],
        labels: members
            .iter()
            .map(|&i| pi1.space().label(i).to_string())
            .collect(),
    })
}

/// A pure equilibrium: a cell that is simultaneously a column maximum and
/// a row minimum. Indices are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Equilibrium {
    pub row: usize,
    pub col: usize,
}

impl Equilibrium {
    /// `(α, β)` in the 1-based convention used when presenting games.
    pub fn one_based(self) -> (usize, usize) {
        (self.row + 1, self.col + 1)
    }
}

/// Finds a pure equilibrium if one exists; with several, returns the one
/// with the smallest (row, column) pair.
pub fn pure_equilibrium(g: &PayoffMatrix) -> Option<Equilibrium> {
    for row in 0..2 {
        for col in 0..g.cols() {
            let v = g.entry(row, col);
            let col_max = (0..2).all(|r| g.entry(r, col) <= v);
            let row_min = (0..g.cols()).all(|c| g.entry(row, c) >= v);
            if col_max && row_min {
                return Some(Equilibrium { row, col });
            }
        }
    }
    None
}

/// Largest row minimum over pure row strategies.
pub fn maximin(g: &PayoffMatrix) -> Rational {
    (0..2)
        .map(|r| (0..g.cols()).map(|c| g.entry(r, c)).min().unwrap().clone())
        .max()
        .unwrap()
}

/// Smallest column maximum over pure column strategies.
pub fn minimax(g: &PayoffMatrix) -> Rational {
    (0..g.cols())
        .map(|c| (0..2).map(|r| g.entry(r, c)).max().unwrap().clone())
        .min()
        .unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Removed {
    Column,
    Row,
}

/// One elimination step; indices are zero-based positions in the original
/// matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub kind: Removed,
    pub index: usize,
    pub dominated_by: usize,
}

/// Result of iterated weak-dominance elimination: columns first to a
/// fixpoint, then rows. `kept_rows`/`kept_cols` map reduced indices back
/// to original ones; the reduced matrix may have a single row.
#[derive(Clone, Debug)]
pub struct ReducedGame {
    pub rows: Vec<Vec<Rational>>,
    pub labels: Vec<String>,
    pub steps: Vec<EliminationStep>,
    pub kept_rows: Vec<usize>,
    pub kept_cols: Vec<usize>,
}

/// Removes weakly dominated columns (the column player minimizes), then
/// weakly dominated rows (the row player maximizes). Exact ties remove
/// the higher index, so elimination is deterministic and terminates.
pub fn dominance_eliminate(g: &PayoffMatrix) -> ReducedGame {
    let mut steps = Vec::new();
    let mut cols: Vec<usize> = (0..g.cols()).collect();
    let mut rows: Vec<usize> = vec![0, 1];

    // Column c is removed when some remaining column d is everywhere <= c,
    // either strictly somewhere or (on an exact tie) with d < c.
    'cols: loop {
        for (ci, &c) in cols.iter().enumerate() {
            for &d in &cols {
                if d == c {
                    continue;
                }
                let le = rows.iter().all(|&r| g.entry(r, d) <= g.entry(r, c));
                let eq = rows.iter().all(|&r| g.entry(r, d) == g.entry(r, c));
                if le && (!eq || d < c) {
                    steps.push(EliminationStep {
                        kind: Removed::Column,
                        index: c,
                        dominated_by: d,
                    });
                    cols.remove(ci);
                    continue 'cols;
                }
            }
        }
        break;
    }

    'rows: loop {
        for (ri, &r) in rows.iter().enumerate() {
            for &s in &rows {
                if s == r {
                    continue;
                }
                let ge = cols.iter().all(|&c| g.entry(s, c) >= g.entry(r, c));
                let eq = cols.iter().all(|&c| g.entry(s, c) == g.entry(r, c));
                if ge && (!eq || s < r) {
                    steps.push(EliminationStep {
                        kind: Removed::Row,
                        index: r,
                        dominated_by: s,
                    });
                    rows.remove(ri);
                    continue 'rows;
                }
            }
        }
        break;
    }

    ReducedGame {
        rows: rows
            .iter()
            .map(|&r| cols.iter().map(|&c| g.entry(r, c).clone()).collect())
            .collect(),
        labels: if g.labels.is_empty() {
            Vec::new()
        } else {
            cols.iter().map(|&c| g.labels[c].clone()).collect()
        },
        steps,
        kept_rows: rows,
        kept_cols: cols,
    }
}

/// One line per element: its value at `p = 1` (the first distribution's
/// axis) and at `p = 0` (the second's), drawn un-negated as in the
/// graphical method.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub label: String,
    pub at_p1: Rational,
    pub at_p0: Rational,
}

impl Line {
    pub fn slope(&self) -> Rational {
        &self.at_p1 - &self.at_p0
    }

    pub fn value_at(&self, p: &Rational) -> Rational {
        p * &self.at_p1 + &(&Rational::one() - p) * &self.at_p0
    }
}

/// An interior crossing of two lines, with its parameter in (0, 1) and
/// whether the slopes point the same way (a zero slope is compatible with
/// either sign).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub i: usize,
    pub j: usize,
    pub parameter: Rational,
    pub same_slope: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineDiagram {
    pub lines: Vec<Line>,
    pub crossings: Vec<Crossing>,
}

impl LineDiagram {
    pub fn crossing_labels(&self) -> Vec<(&str, &str, bool)> {
        self.crossings
            .iter()
            .map(|c| {
                (
                    self.lines[c.i].label.as_str(),
                    self.lines[c.j].label.as_str(),
                    c.same_slope,
                )
            })
            .collect()
    }
}

/// Builds the diagram for the elements of `A` in label order. Two lines
/// cross strictly inside (0, 1) exactly when their end differences have
/// strictly opposite signs; a crossing at an endpoint is not interior, and
/// coincident lines do not cross.
pub fn line_diagram(
    pi1: &PossibilityDistribution,
    pi2: &PossibilityDistribution,
    a: Event,
) -> Result<LineDiagram, Error> {
    if pi1.space() != pi2.space() {
        return Err(Error::SpaceMismatch);
    }
    if a.is_empty() {
        return Err(Error::EmptyEvent);
    }
    let members: Vec<usize> = a.members().filter(|&i| i < pi1.space().n()).collect();
    let lines: Vec<Line> = members
        .iter()
        .map(|&i| Line {
            label: pi1.space().label(i).to_string(),
            at_p1: pi1.value(i).clone(),
            at_p0: pi2.value(i).clone(),
        })
        .collect();

    let mut crossings = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let d1 = &lines[i].at_p1 - &lines[j].at_p1;
            let d0 = &lines[i].at_p0 - &lines[j].at_p0;
            let opposite_ends = (d1.is_positive() && d0.is_negative())
                || (d1.is_negative() && d0.is_positive());
            if !opposite_ends {
                continue;
            }
            // f_i(p) - f_j(p) = p*d1 + (1-p)*d0 vanishes at p = d0/(d0-d1).
            let parameter = &d0 / &(&d0 - &d1);
            let si = lines[i].slope();
            let sj = lines[j].slope();
            let same_slope =
                si.is_zero() || sj.is_zero() || si.is_positive() == sj.is_positive();
            crossings.push(Crossing {
                i,
                j,
                parameter,
                same_slope,
            });
        }
    }
    Ok(LineDiagram { lines, crossings })
}

/// The lower envelope of the payoff lines is monotone — equivalently the
/// game has a pure equilibrium for every sub-event — iff every pair of
/// lines with an interior crossing is sloped the same way.
pub fn envelope_is_monotone(d: &LineDiagram) -> bool {
    d.crossings.iter().all(|c| c.same_slope)
}
