//! Rendering: the game-theoretic line diagram as a self-contained SVG
//! document, and the machine-readable diagnosis bundle as stable-key JSON
//! with every rational given both as an exact fraction and as a rounded
//! decimal.

use crate::adjust::Adjustment;
use crate::capacity::UpperProbability;
use crate::closure::ClosureDiagnosis;
use crate::distribution::MassFunction;
use crate::game::LineDiagram;
use crate::rational::Rational;
use serde_json::{json, Map, Value};

/// Colors cycle by element index so a given input always renders the same.
const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

const SIG_DIGITS: u32 = 6;

/// What to draw: the base diagram, an optional adjusted diagram rendered
/// as a dashed overlay (only lines that actually moved), and the canvas
/// size in abstract units.
#[derive(Clone, Debug)]
pub struct PlotSpec {
    pub diagram: LineDiagram,
    pub adjusted: Option<LineDiagram>,
    pub width: u32,
    pub height: u32,
}

impl PlotSpec {
    pub fn new(diagram: LineDiagram) -> Self {
        PlotSpec {
            diagram,
            adjusted: None,
            width: 640,
            height: 440,
        }
    }

    pub fn with_adjusted(mut self, adjusted: LineDiagram) -> Self {
        self.adjusted = Some(adjusted);
        self
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
        .replace('\'', "&apos;")
}

/// Renders the diagram: two vertical axes scaled 0..1 (the first
/// distribution on the left at `p = 1`, the second on the right at
/// `p = 0`), one labeled line per element, a mark on every interior
/// crossing, a highlight on the opposite-slope ones, and dashed primed
/// lines for the adjusted overlay.
pub fn render_svg(spec: &PlotSpec) -> String {
    let w = spec.width as i64;
    let h = spec.height as i64;
    let left: i64 = 70;
    let right = w - 70;
    let top: i64 = 40;
    let bottom = h - 45;
    let plot_w = Rational::from_int(right - left);
    let plot_h = Rational::from_int(bottom - top);
    let one = Rational::one();

    // Value v in [0,1] to a y pixel, p in [0,1] to an x pixel (p = 1 left).
    let y_of = |v: &Rational| -> String {
        (&Rational::from_int(top) + &(&(&one - v) * &plot_h)).decimal(SIG_DIGITS)
    };
    let x_of = |p: &Rational| -> String {
        (&Rational::from_int(left) + &(&(&one - p) * &plot_w)).decimal(SIG_DIGITS)
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n"
    ));

    // Axes with 0/1 ticks and the p direction annotations.
    for (x, title, anchor) in [(left, "&#960;1", "end"), (right, "&#960;2", "start")] {
        out.push_str(&format!(
            "  <line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"#333333\" stroke-width=\"1\"/>\n",
            top - 8,
            bottom + 8
        ));
        out.push_str(&format!(
            "  <text x=\"{x}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">{title}</text>\n",
            top - 16
        ));
        for (v, label) in [(Rational::zero(), "0"), (Rational::one(), "1")] {
            let dx: i64 = if anchor == "end" { -8 } else { 8 };
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"{anchor}\" font-family=\"sans-serif\" font-size=\"12\">{label}</text>\n",
                x + dx,
                y_of(&v)
            ));
        }
    }
    out.push_str(&format!(
        "  <text x=\"{left}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">p=1</text>\n",
        bottom + 30
    ));
    out.push_str(&format!(
        "  <text x=\"{right}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">p=0</text>\n",
        bottom + 30
    ));

    // Base lines, one per element, labeled near the right axis.
    for (i, line) in spec.diagram.lines.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        out.push_str(&format!(
            "  <line class=\"pline\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
            x_of(&one),
            y_of(&line.at_p1),
            x_of(&Rational::zero()),
            y_of(&line.at_p0),
        ));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"{color}\">{}</text>\n",
            right + 28,
            y_of(&line.at_p0),
            xml_escape(&line.label)
        ));
    }

    // Interior crossings: every one gets a mark, opposite slopes get the
    // highlight glyph.
    for c in &spec.diagram.crossings {
        let p = &c.parameter;
        let v = spec.diagram.lines[c.i].value_at(p);
        if c.same_slope {
            out.push_str(&format!(
                "  <circle class=\"crossing\" cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n",
                x_of(p),
                y_of(&v)
            ));
        } else {
            out.push_str(&format!(
                "  <circle class=\"violation\" cx=\"{}\" cy=\"{}\" r=\"6\" fill=\"#d62728\" fill-opacity=\"0.85\" stroke=\"#7f0000\" stroke-width=\"1.5\"/>\n",
                x_of(p),
                y_of(&v)
            ));
        }
    }

    // Adjusted overlay: dashed primed copies of the lines that moved.
    if let Some(adjusted) = &spec.adjusted {
        for (i, line) in adjusted.lines.iter().enumerate() {
            let base = spec
                .diagram
                .lines
                .iter()
                .find(|b| b.label == line.label);
            if base.is_some_and(|b| b.at_p0 == line.at_p0 && b.at_p1 == line.at_p1) {
                continue;
            }
            let color = PALETTE[i % PALETTE.len()];
            out.push_str(&format!(
                "  <line class=\"adjusted\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"2\" stroke-dasharray=\"7 4\"/>\n",
                x_of(&one),
                y_of(&line.at_p1),
                x_of(&Rational::zero()),
                y_of(&line.at_p0),
            ));
            out.push_str(&format!(
                "  <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"{color}\">{}&#8242;</text>\n",
                right + 46,
                y_of(&line.at_p0),
                xml_escape(&line.label)
            ));
        }
    }

    out.push_str("</svg>\n");
    out
}

/// A rational as `{"frac": ..., "dec": ...}`.
pub fn rational_json(r: &Rational) -> Value {
    json!({ "frac": r.to_string(), "dec": r.decimal(SIG_DIGITS) })
}

/// A value list as parallel fraction and decimal arrays.
pub fn values_json(values: &[Rational]) -> Value {
    json!({
        "frac": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "dec": values.iter().map(|v| v.decimal(SIG_DIGITS)).collect::<Vec<_>>(),
    })
}

fn mass_json(q: &MassFunction) -> Value {
    values_json(q.masses())
}

/// The full event table keyed by comma-joined member labels (the empty
/// event keys as `""`), in ascending mask order, fractions and decimals
/// side by side.
pub fn event_table_json(u: &UpperProbability) -> (Value, Value) {
    let mut frac = Map::new();
    let mut dec = Map::new();
    let space = u.space();
    for e in space.events() {
        let key = space.event_key(e);
        let v = u.get(e);
        frac.insert(key.clone(), Value::String(v.to_string()));
        dec.insert(key, Value::String(v.decimal(SIG_DIGITS)));
    }
    (Value::Object(frac), Value::Object(dec))
}

pub fn adjustment_json(adj: &Adjustment) -> Value {
    json!({
        "strategy": adj.strategy.name(),
        "pi1": values_json(adj.pi1_out.values()),
        "pi2": values_json(adj.pi2_out.values()),
        "total_increase": rational_json(&adj.total_increase),
        "changed": adj.changed.iter().map(|c| json!({
            "element": c.element,
            "distribution": c.which,
            "old": rational_json(&c.old),
            "new": rational_json(&c.new),
        })).collect::<Vec<_>>(),
    })
}

pub fn diagnosis_json(d: &ClosureDiagnosis) -> Value {
    let witnesses = d.witnesses.as_ref().map(|w| {
        json!({
            "feasible": w.feasible.as_ref().map(mass_json),
            "non_possibility": w.non_possibility.as_ref().map(mass_json),
        })
    });
    json!({
        "avoids_sure_loss": d.avoids_sure_loss,
        "coherent": d.coherent,
        "two_alternating": d.two_alternating,
        "union_convex": d.union_convex,
        "conjunction_is_possibility": d.conjunction_is_possibility,
        "natext_is_possibility": d.natext_is_possibility,
        "violating_pairs": d.violating_pairs,
        "normalization_point": d.normalization_point,
        "witnesses": witnesses,
    })
}

/// The machine-readable bundle: deterministic key order, compact text,
/// byte-identical for identical inputs.
pub fn emit_report(d: &ClosureDiagnosis, adj: Option<&Adjustment>) -> String {
    let doc = json!({
        "schema": 1,
        "diagnosis": diagnosis_json(d),
        "adjustment": adj.map(adjustment_json),
    });
    doc.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::diagnose;
    use crate::distribution::PossibilityDistribution;
    use crate::game::line_diagram;
    use crate::space::Space;

    fn space(labels: &[&str]) -> Space {
        Space::new(labels.iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn dist(sp: &Space, vals: &[&str]) -> PossibilityDistribution {
        PossibilityDistribution::new(sp.clone(), vals.iter().map(|s| s.parse().unwrap()).collect())
            .unwrap()
    }

    #[test]
    fn svg_counts_lines_and_marks() {
        let sp = Space::new((1..=9).map(|i| i.to_string()).collect()).unwrap();
        let pi1 = dist(
            &sp,
            &["1", "0.95", "0.95", "0.8", "0.7", "0.2", "0.3", "0.1", "0.05"],
        );
        let pi2 = dist(
            &sp,
            &["1", "0.8", "0.6", "0.7", "0.6", "0.6", "0.3", "0.4", "0.1"],
        );
        let d = line_diagram(&pi1, &pi2, sp.full_event()).unwrap();
        let svg = render_svg(&PlotSpec::new(d));
        assert_eq!(svg.matches("class=\"pline\"").count(), 9);
        assert_eq!(svg.matches("class=\"crossing\"").count(), 3);
        assert_eq!(svg.matches("class=\"violation\"").count(), 0);
    }

    #[test]
    fn svg_dashed_overlay_marks_moved_lines() {
        let sp = Space::new((1..=8).map(|i| i.to_string()).collect()).unwrap();
        let pi1 = dist(&sp, &["1", "0.9", "0.7", "0.6", "0.5", "0.4", "0.3", "0.1"]);
        let pi2 = dist(&sp, &["0.8", "0.2", "1", "0.6", "0.1", "0.2", "0.3", "0.9"]);
        // A correction that raises lines 1 and 2 flat and lifts line 8.
        let adj1 = dist(&sp, &["1", "0.9", "0.7", "0.6", "0.5", "0.4", "0.3", "0.5"]);
        let adj2 = dist(&sp, &["1", "0.9", "1", "0.6", "0.1", "0.2", "0.3", "0.9"]);
        let base = line_diagram(&pi1, &pi2, sp.full_event()).unwrap();
        let over = line_diagram(&adj1, &adj2, sp.full_event()).unwrap();
        let svg = render_svg(&PlotSpec::new(base).with_adjusted(over));
        assert_eq!(svg.matches("class=\"adjusted\"").count(), 3);
        for primed in ["1&#8242;", "2&#8242;", "8&#8242;"] {
            assert!(svg.contains(primed), "missing dashed label {primed}");
        }
        assert!(svg.matches("class=\"violation\"").count() >= 1);
    }

    #[test]
    fn svg_single_line() {
        let sp = space(&["only"]);
        let pi = dist(&sp, &["1"]);
        let d = line_diagram(&pi, &pi, sp.full_event()).unwrap();
        let svg = render_svg(&PlotSpec::new(d));
        assert_eq!(svg.matches("class=\"pline\"").count(), 1);
        assert_eq!(svg.matches("class=\"crossing\"").count(), 0);
    }

    #[test]
    fn report_is_deterministic() {
        let sp = space(&["d", "h", "n"]);
        let pi1 = dist(&sp, &["1", "0.5", "0.2"]);
        let pi2 = dist(&sp, &["1", "0.3", "0.4"]);
        let d1 = diagnose(&pi1, &pi2, true).unwrap();
        let d2 = diagnose(&pi1, &pi2, true).unwrap();
        assert_eq!(emit_report(&d1, None), emit_report(&d2, None));
        let text = emit_report(&d1, None);
        assert!(text.contains("\"schema\":1"));
        assert!(text.contains("\"coherent\":true"));
        assert!(text.contains("\"natext_is_possibility\":false"));
    }

    #[test]
    fn report_on_identical_inputs() {
        let sp = space(&["a", "b"]);
        let pi = dist(&sp, &["1", "0.4"]);
        let d = diagnose(&pi, &pi, false).unwrap();
        let text = emit_report(&d, None);
        assert!(text.contains("\"conjunction_is_possibility\":true"));
        assert!(text.contains("\"violating_pairs\":[]"));
    }

    #[test]
    fn table_keys_are_label_lists() {
        let sp = space(&["d", "h"]);
        let u = crate::capacity::possibility_measure(&dist(&sp, &["1", "0.3"]));
        let (frac, _) = event_table_json(&u);
        let obj = frac.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(keys, ["", "d", "h", "d,h"]);
        assert_eq!(obj["h"], "3/10");
    }
}
