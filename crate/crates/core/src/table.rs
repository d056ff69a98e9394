//! Orbit-table rendering in compact cell notation and its inverse parser.
//!
//! A cell like `1;2;3^2;4^3;5^2;6^2;7;8` lists the simple-root indices of a
//! root with their multiplicities; a single leading `-` covers the whole cell
//! since reduced roots are uniformly positive or negative.

use crate::error::Error;
use crate::reduced::ReducedRootSpace;
use crate::weyl::Root;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuperscriptStyle {
    /// `3^2`
    Plain,
    /// `3²`
    Unicode,
}

fn superscript(m: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    m.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Compact rendering of one root. Errors if coordinates carry mixed signs.
pub fn render_cell(root: &Root, style: SuperscriptStyle) -> Result<String, Error> {
    let has_pos = root.0.iter().any(|&x| x > 0);
    let has_neg = root.0.iter().any(|&x| x < 0);
    if has_pos && has_neg {
        return Err(Error::MixedSignRoot(root.to_string()));
    }
    let mut parts = Vec::new();
    for (idx, &x) in root.0.iter().enumerate() {
        let m = x.abs();
        if m == 0 {
            continue;
        }
        if m == 1 {
            parts.push(format!("{}", idx + 1));
        } else {
            match style {
                SuperscriptStyle::Plain => parts.push(format!("{}^{}", idx + 1, m)),
                SuperscriptStyle::Unicode => parts.push(format!("{}{}", idx + 1, superscript(m))),
            }
        }
    }
    if parts.is_empty() {
        return Ok("0".into());
    }
    Ok(format!(
        "{}{}",
        if has_neg { "-" } else { "" },
        parts.join(";")
    ))
}

/// Inverse of [`render_cell`] (both styles accepted).
pub fn parse_cell(cell: &str, rank: usize) -> Result<Root, Error> {
    let cell = cell.trim();
    if cell == "0" {
        return Ok(Root(vec![0; rank]));
    }
    let (sign, body) = match cell.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1i64, cell),
    };
    let mut coords = vec![0i64; rank];
    for part in body.split(';') {
        let (idx_s, mult) = if let Some((i, m)) = part.split_once('^') {
            (
                i,
                m.parse::<i64>()
                    .map_err(|_| Error::BadCell(cell.to_string()))?,
            )
        } else {
            // trailing unicode superscript digits, if any
            let split = part
                .char_indices()
                .find(|(_, ch)| "⁰¹²³⁴⁵⁶⁷⁸⁹".contains(*ch))
                .map(|(i, _)| i);
            match split {
                Some(i) => {
                    let m: String = part[i..]
                        .chars()
                        .map(|ch| match ch {
                            '⁰' => '0',
                            '¹' => '1',
                            '²' => '2',
                            '³' => '3',
                            '⁴' => '4',
                            '⁵' => '5',
                            '⁶' => '6',
                            '⁷' => '7',
                            '⁸' => '8',
                            '⁹' => '9',
                            _ => ch,
                        })
                        .collect();
                    (
                        &part[..i],
                        m.parse::<i64>()
                            .map_err(|_| Error::BadCell(cell.to_string()))?,
                    )
                }
                None => (part, 1),
            }
        };
        let idx: usize = idx_s
            .parse()
            .map_err(|_| Error::BadCell(cell.to_string()))?;
        if idx == 0 || idx > rank {
            return Err(Error::BadCell(cell.to_string()));
        }
        coords[idx - 1] = sign * mult;
    }
    Ok(Root(coords))
}

/// Render the orbit table: rows sigma~^n for n = 1..h-1, one column per
/// seed vertex.
pub fn render_orbit_table(
    space: &ReducedRootSpace,
    style: SuperscriptStyle,
) -> Result<String, Error> {
    let rank = space.rank;
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["Delta~".to_string()];
    for i in 1..=rank {
        header.push(format!("a{}", i));
    }
    grid.push(header);
    for n in 1..space.order {
        let mut row = vec![format!("s~^{}", n)];
        for i in 0..rank {
            row.push(render_cell(&space.orbits[i][n], style)?);
        }
        grid.push(row);
    }
    let ncols = rank + 1;
    let widths: Vec<usize> = (0..ncols)
        .map(|j| grid.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in &grid {
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(" | ");
            }
            out.push_str(cell);
            for _ in cell.chars().count()..widths[j] {
                out.push(' ');
            }
        }
        out.push('\n');
    }
    Ok(out)
}

/// Orbit table cells alone, row-major, n = 1..h-1 by vertex; handy for
/// exact comparisons and JSON export.
pub fn orbit_table_cells(
    space: &ReducedRootSpace,
    style: SuperscriptStyle,
) -> Result<Vec<Vec<String>>, Error> {
    (1..space.order)
        .map(|n| {
            (0..space.rank)
                .map(|i| render_cell(&space.orbits[i][n], style))
                .collect()
        })
        .collect()
}
