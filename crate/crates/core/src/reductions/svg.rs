//! SVG rendering of gadget collections for visual inspection.

use std::fmt::Write;

use super::disks::{blocked_zone_radius_sq, GadgetDiskCollection, Role};
use crate::geometry::DiskKind;

const SCALE: f64 = 24.0;

fn fill(role: Role, kind: DiskKind) -> &'static str {
    match (role, kind) {
        (Role::ClauseDisk, _) => "#d62728",
        (Role::TruthSetter, _) => "#2ca02c",
        (Role::ArmEnd, _) => "#ff7f0e",
        (Role::Blocking, _) | (Role::Link, _) => "#9467bd",
        (_, DiskKind::Transition) => "#1f77b4",
        (_, DiskKind::Heavy(_)) => "#7f7f7f",
    }
}

/// SVG 1.1 document: disks at their current positions, dashed blocked-zone
/// boundaries, and a faint ghost at the original center of each moved disk.
pub fn render_svg(coll: &GadgetDiskCollection) -> String {
    let pts: Vec<(f64, f64)> = coll
        .disks
        .iter()
        .flat_map(|d| [&d.center, d.position()])
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, x1, y0, y1) = (x, x, y, y);
    }
    for &(x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let pad = 1.5;
    let (w, h) = ((x1 - x0 + 2.0 * pad) * SCALE, (y1 - y0 + 2.0 * pad) * SCALE);
    // y grows downward in SVG.
    let sx = |x: f64| (x - x0 + pad) * SCALE;
    let sy = |y: f64| (y1 - y + pad) * SCALE;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (i, d) in coll.disks.iter().enumerate() {
        let (cx, cy) = (d.position().x.to_f64(), d.position().y.to_f64());
        if d.moved_to.is_some() {
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="{}" stroke-opacity="0.35"/>"#,
                sx(d.center.x.to_f64()),
                sy(d.center.y.to_f64()),
                0.5 * SCALE,
                fill(coll.roles[i], d.kind)
            );
        }
        if let Some(r2) = blocked_zone_radius_sq(d) {
            let r = r2.to_f64().sqrt();
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="none" stroke="black" stroke-width="0.5" stroke-dasharray="3,2" stroke-opacity="0.4"/>"#,
                sx(cx),
                sy(cy),
                r * SCALE
            );
        }
        let _ = write!(
            out,
            r#"<circle cx="{:.2}" cy="{:.2}" r="{:.2}" fill="{}" fill-opacity="0.55" stroke="black" stroke-width="0.6">"#,
            sx(cx),
            sy(cy),
            0.5 * SCALE,
            fill(coll.roles[i], d.kind)
        );
        let kind = match d.kind {
            DiskKind::Transition => "transition".to_string(),
            DiskKind::Heavy(k) => format!("{k}-heavy"),
        };
        let label = &coll.labels[i];
        let _ = writeln!(out, "<title>{i} {kind} {label} {}</title></circle>", d.position());
    }
    out.push_str("</svg>\n");
    out
}
