/// Formats a doubled half-integer: `4 -> "2"`, `-3 -> "-3/2"`.
pub fn half_int(doubled: i32) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

/// Parses `"2"`, `"-3/2"` into a doubled integer.
pub fn parse_half_int(s: &str) -> Option<i32> {
    match s.split_once('/') {
        Some((p, "2")) => {
            let p: i32 = p.parse().ok()?;
            (p % 2 != 0).then_some(p)
        }
        Some(_) => None,
        None => s.parse::<i32>().ok().map(|n| 2 * n),
    }
}
