//! Minimal hand-emitted SVG line charts: axes, one polyline per column, and
//! a legend. CSV is the data contract; these figures are for eyeballing.

use crate::table::CurveTable;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

pub const DEFAULT_WIDTH: u32 = 800;
pub const DEFAULT_HEIGHT: u32 = 600;

/// Renders the table as a standalone SVG 1.1 document. Validity gaps (empty
/// cells) split the polyline rather than interpolating across.
pub fn render_line_chart(table: &CurveTable, title: &str, width: u32, height: u32) -> String {
    let margin = 60.0;
    let w = width as f64;
    let h = height as f64;
    let plot_w = w - 2.0 * margin;
    let plot_h = h - 2.0 * margin;

    let x_min = table.abscissa.first().copied().unwrap_or(0.0);
    let x_max = table.abscissa.last().copied().unwrap_or(1.0);
    let x_span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for c in &table.columns {
        for v in c.cells.iter().flatten() {
            y_min = y_min.min(*v);
            y_max = y_max.max(*v);
        }
    }
    if !y_min.is_finite() {
        y_min = 0.0;
        y_max = 1.0;
    }
    if y_max <= y_min {
        y_max = y_min + 1.0;
    }
    let y_span = y_max - y_min;

    let to_px = |x: f64, y: f64| {
        (
            margin + (x - x_min) / x_span * plot_w,
            h - margin - (y - y_min) / y_span * plot_h,
        )
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" \
         text-anchor=\"middle\">{}</text>\n",
        w / 2.0,
        xml_escape(title)
    ));

    // axes
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b}\" x2=\"{r}\" y2=\"{b}\" stroke=\"black\"/>\n\
         <line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b}\" stroke=\"black\"/>\n",
        m = margin,
        b = h - margin,
        r = w - margin,
        t = margin,
    ));
    // axis labels: min / max of each range plus the abscissa name
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
         text-anchor=\"middle\">{}</text>\n",
        w / 2.0,
        h - margin / 4.0,
        xml_escape(&table.abscissa_name)
    ));
    for (x_val, anchor) in [(x_min, "start"), (x_max, "end")] {
        let (px, _) = to_px(x_val, y_min);
        svg.push_str(&format!(
            "<text x=\"{px}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"{anchor}\">{x_val:.6}</text>\n",
            h - margin + 16.0
        ));
    }
    for y_val in [y_min, y_max] {
        let (_, py) = to_px(x_min, y_val);
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{py}\" font-family=\"sans-serif\" font-size=\"11\" \
             text-anchor=\"end\">{y_val:.6}</text>\n",
            margin - 6.0
        ));
    }

    // one polyline per column, split at validity gaps
    for (ci, col) in table.columns.iter().enumerate() {
        let color = PALETTE[ci % PALETTE.len()];
        let mut run: Vec<(f64, f64)> = Vec::new();
        let flush = |run: &mut Vec<(f64, f64)>, svg: &mut String| {
            if run.len() >= 2 {
                let pts: Vec<String> = run
                    .iter()
                    .map(|&(x, y)| format!("{x:.2},{y:.2}"))
                    .collect();
                svg.push_str(&format!(
                    "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" \
                     points=\"{}\"/>\n",
                    pts.join(" ")
                ));
            }
            run.clear();
        };
        for (i, cell) in col.cells.iter().enumerate() {
            match cell {
                Some(v) => run.push(to_px(table.abscissa[i], *v)),
                None => flush(&mut run, &mut svg),
            }
        }
        flush(&mut run, &mut svg);

        // legend entry
        let ly = margin + 18.0 * ci as f64 + 6.0;
        svg.push_str(&format!(
            "<line x1=\"{x0}\" y1=\"{ly}\" x2=\"{x1}\" y2=\"{ly}\" stroke=\"{color}\" \
             stroke-width=\"2\"/>\n\
             <text x=\"{xt}\" y=\"{yt}\" font-family=\"sans-serif\" font-size=\"12\">{name}</text>\n",
            x0 = w - margin - 130.0,
            x1 = w - margin - 100.0,
            xt = w - margin - 94.0,
            yt = ly + 4.0,
            name = xml_escape(&col.name),
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
