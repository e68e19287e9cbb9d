//! Output formatting helpers.

use meshlab_core::Permutation;

/// JSON object with the eight statistics and antirecord positions, or an
/// aligned table under `pretty`.
pub fn stats(p: &Permutation, pretty: bool) -> String {
    let rows: [(&str, usize); 8] = [
        ("exc", p.exc()),
        ("inv", p.inv()),
        ("rec", p.rec()),
        ("arec", p.arec()),
        ("erec", p.erec()),
        ("earec", p.earec()),
        ("rar", p.rar()),
        ("succ", p.succ()),
    ];
    let arec_positions = p.arec_positions();
    if pretty {
        let mut out = format!("perm   {p}\nn      {}\n", p.len());
        for (name, value) in rows {
            out.push_str(&format!("{name:<6} {value}\n"));
        }
        let positions: Vec<String> = arec_positions.iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("AREC   ({})\n", positions.join(",")));
        out
    } else {
        // field order is fixed by hand to keep output byte-stable
        let mut json = format!("{{\"perm\":\"{p}\",\"n\":{}", p.len());
        for (name, value) in rows {
            json.push_str(&format!(",\"{name}\":{value}"));
        }
        let positions: Vec<String> = arec_positions.iter().map(|i| i.to_string()).collect();
        json.push_str(&format!(",\"arec_positions\":[{}]}}\n", positions.join(",")));
        json
    }
}
