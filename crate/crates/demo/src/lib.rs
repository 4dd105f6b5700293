//! wasm-bindgen entry points for `www/index.html`.
//!
//! Every export returns a string (JSON or SVG) so the functions behave the
//! same natively and in the browser; failures come back as `{"error": ...}`.

use std::f64::consts::TAU;
use std::fmt::Write;

use palintiple::young::{build_young_graph, is_1089_graph, is_complete, YoungGraph};
use palintiple::{derive_family, instantiate_with, theorem_family, DerivationMode, Palintiple, ParametricFamily, Theorem};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest graph drawn; bigger ones get a placeholder.
const MAX_DRAWN_NODES: usize = 40;

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

fn instance_json(p: &Palintiple) -> Value {
    json!({
        "literal": p.literal(),
        "multiplier": p.multiplier(),
        "base": p.base(),
        "digits": p.digits_msf(),
        "carries": p.carries_msf(),
        "class": p.classify(),
        "value": p.value().to_string(),
        "reversal": p.reversal_value().to_string(),
    })
}

/// Digits, carries and class of a literal such as `8,7,1,2@10*4`.
#[wasm_bindgen]
pub fn classify(literal: &str) -> String {
    match literal.parse::<Palintiple>() {
        Ok(p) => instance_json(&p).to_string(),
        Err(e) => error(e),
    }
}

fn build_family(literal: &str, rule: &str, nhat: u32) -> Result<ParametricFamily, String> {
    let p: Palintiple = literal.parse().map_err(|e| format!("{e}"))?;
    let nhat = (nhat > 0).then_some(nhat as u64);
    if let Ok(t) = rule.parse::<Theorem>() {
        return theorem_family(&p, t, nhat).map_err(|e| e.to_string());
    }
    let mode: DerivationMode = rule.parse().map_err(|e| format!("{e}"))?;
    let nhat = nhat.ok_or("the generic derivations need a new multiplier")?;
    derive_family(&p, mode, nhat).map_err(|e| e.to_string())
}

/// Family of `literal` under `rule` (a theorem name such as `hoey` or a
/// mode such as `rho-double`), evaluated at `alpha`. `nhat = 0` lets
/// theorems pick the multiplier.
#[wasm_bindgen]
pub fn family(literal: &str, rule: &str, nhat: u32, alpha: i32) -> String {
    let family = match build_family(literal, rule, nhat) {
        Ok(f) => f,
        Err(e) => return error(e),
    };
    let member = match instantiate_with(&family, alpha as i128, false) {
        Ok(q) => instance_json(&q),
        Err(e) => json!({ "error": e.to_string() }),
    };
    json!({
        "description": family.to_string(),
        "family": family.to_record(),
        "admissible": family.admissible(12),
        "alpha": alpha,
        "member": member,
    })
    .to_string()
}

/// Node, edge and terminal data for `Y(n, b)`.
#[wasm_bindgen]
pub fn young_summary(n: u32, b: u32) -> String {
    match build_young_graph(n as u64, b as u64) {
        Ok(g) => {
            let mut v = serde_json::to_value(g.summary()).expect("summary serializes");
            v["is_1089"] = json!(is_1089_graph(&g));
            v["complete"] = json!(is_complete(&g));
            v.to_string()
        }
        Err(e) => error(e),
    }
}

/// `Y(n, b)` drawn as SVG: nodes on a circle, the start node boxed, even
/// terminals with a second ring and odd terminals filled.
#[wasm_bindgen]
pub fn young_svg(n: u32, b: u32) -> String {
    match build_young_graph(n as u64, b as u64) {
        Ok(g) if g.node_count() <= MAX_DRAWN_NODES => draw(&g),
        Ok(g) => message_svg(&format!("Y({n},{b}) has {} nodes; too many to draw", g.node_count())),
        Err(e) => message_svg(&e.to_string()),
    }
}

fn message_svg(text: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"60\"><text x=\"10\" y=\"35\" font-family=\"sans-serif\" font-size=\"14\">{}</text></svg>",
        escape(text)
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn draw(g: &YoungGraph) -> String {
    const SIZE: f64 = 520.0;
    const R_NODE: f64 = 22.0;
    let m = g.node_count();
    let c = SIZE / 2.0;
    let ring = if m == 1 { 0.0 } else { c - 80.0 };
    let pos: Vec<(f64, f64)> = (0..m)
        .map(|i| {
            let t = TAU * i as f64 / m as f64 - TAU / 4.0;
            (c + ring * t.cos(), c + ring * t.sin())
        })
        .collect();

    // one drawn arc per ordered node pair, carrying every label
    let mut arcs: std::collections::BTreeMap<(usize, usize), Vec<String>> = Default::default();
    for e in g.edges() {
        arcs.entry((e.from, e.to)).or_default().push(format!("{},{}", e.d_low, e.d_high));
    }

    let mut s = String::new();
    let _ = write!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE} {SIZE}\" width=\"{SIZE}\" height=\"{SIZE}\" font-family=\"sans-serif\">\
         <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">\
         <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>"
    );
    let _ = write!(s, "<text x=\"10\" y=\"{}\" font-size=\"14\">Y({},{})</text>", SIZE - 10.0, g.multiplier(), g.base());
    for (&(i, j), labels) in &arcs {
        let label = abbreviate(labels);
        let (x1, y1) = pos[i];
        if i == j {
            // loop drawn outward from the centre
            let (dx, dy) = unit(x1 - c, y1 - c);
            let (lx, ly) = (x1 + dx * (R_NODE + 16.0), y1 + dy * (R_NODE + 16.0));
            let _ = write!(
                s,
                "<circle cx=\"{lx:.1}\" cy=\"{ly:.1}\" r=\"16\" fill=\"none\" stroke=\"#555\"/>\
                 <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\">{label}</text>",
                lx + dx * 30.0,
                ly + dy * 30.0 + 4.0
            );
            continue;
        }
        let (x2, y2) = pos[j];
        let (ux, uy) = unit(x2 - x1, y2 - y1);
        let (sx, sy) = (x1 + ux * R_NODE, y1 + uy * R_NODE);
        let (ex, ey) = (x2 - ux * R_NODE, y2 - uy * R_NODE);
        // bend to the left of travel so opposite arcs separate
        let (mx, my) = ((sx + ex) / 2.0, (sy + ey) / 2.0);
        let (qx, qy) = (mx + uy * 40.0, my - ux * 40.0);
        // the curve passes halfway between the chord midpoint and the control point
        let (tx, ty) = ((mx + qx) / 2.0, (my + qy) / 2.0 + 4.0);
        let _ = write!(
            s,
            "<path d=\"M{sx:.1},{sy:.1} Q{qx:.1},{qy:.1} {ex:.1},{ey:.1}\" fill=\"none\" stroke=\"#555\" marker-end=\"url(#arrow)\"/>\
             <text x=\"{tx:.1}\" y=\"{ty:.1}\" font-size=\"11\" text-anchor=\"middle\" fill=\"#a33\">{label}</text>"
        );
    }
    for (i, &(u, w)) in g.nodes().iter().enumerate() {
        let (x, y) = pos[i];
        let fill = if g.is_odd_terminal(i) { "#cde4ff" } else { "#fff" };
        if i == g.start() {
            let _ = write!(
                s,
                "<rect x=\"{:.1}\" y=\"{:.1}\" width=\"{}\" height=\"{}\" fill=\"{fill}\" stroke=\"#000\"/>",
                x - R_NODE,
                y - R_NODE,
                2.0 * R_NODE,
                2.0 * R_NODE
            );
        } else {
            let _ = write!(s, "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{R_NODE}\" fill=\"{fill}\" stroke=\"#000\"/>");
        }
        if g.is_even_terminal(i) {
            let _ = write!(s, "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{}\" fill=\"none\" stroke=\"#000\"/>", R_NODE - 4.0);
        }
        let _ = write!(s, "<text x=\"{x:.1}\" y=\"{:.1}\" font-size=\"12\" text-anchor=\"middle\">{u},{w}</text>", y + 4.0);
    }
    s.push_str("</svg>");
    s
}

fn unit(dx: f64, dy: f64) -> (f64, f64) {
    let len = dx.hypot(dy);
    if len == 0.0 {
        (0.0, -1.0)
    } else {
        (dx / len, dy / len)
    }
}

fn abbreviate(labels: &[String]) -> String {
    match labels.len() {
        0..=2 => labels.join(" "),
        k => format!("{} +{}", labels[..2].join(" "), k - 2),
    }
}
