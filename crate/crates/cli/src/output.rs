//! PGM, CSV and JSON encoders. All writers are pure functions of their input,
//! so equal inputs give byte-identical files.

use serde::Serialize;

use prep_atlas_core::mandelset::EscapeGrid;

/// Binary greymap (P5, maxval 255). Cells bounded within the budget are
/// black; escaping cells get lighter the sooner they escape.
pub fn pgm(grid: &EscapeGrid) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", grid.width, grid.height).into_bytes();
    let sentinel = grid.sentinel();
    let span = u64::from(grid.max_iter.max(1));
    out.extend(grid.cells.iter().map(|&k| {
        if k >= sentinel {
            0
        } else {
            (255 - u64::from(k) * 254 / span) as u8
        }
    }));
    out
}

#[derive(Serialize)]
struct GridRow {
    row: usize,
    col: usize,
    re: f64,
    im: f64,
    escape_count: u32,
    bounded: bool,
}

/// One line per cell: `row,col,re,im,escape_count,bounded`.
pub fn grid_csv(grid: &EscapeGrid) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in 0..grid.height {
        for col in 0..grid.width {
            let c = grid.cell_center(col, row);
            let k = grid.get(col, row);
            w.serialize(GridRow { row, col, re: c.re, im: c.im, escape_count: k, bounded: k == grid.sentinel() })?;
        }
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

/// CSV with a header row taken from the record's field names.
pub fn records_csv<T: Serialize>(rows: &[T]) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}

pub fn json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("views serialize");
    out.push(b'\n');
    out
}

/// Left-aligned text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &mut dyn Iterator<Item = &str>| {
        let s: Vec<String> = cells.zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        s.join("  ").trim_end().to_string()
    };
    let mut out = line(&mut header.iter().copied());
    out.push('\n');
    out.push_str(&line(&mut widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str)));
    out.push('\n');
    for r in rows {
        out.push_str(&line(&mut r.iter().map(String::as_str)));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use prep_atlas_core::arith::rat;
    use prep_atlas_core::mandelset::{escape_grid, Window};

    fn small_grid() -> EscapeGrid {
        let w = Window::new(rat(-2, 1), rat(1, 1), rat(-1, 1), rat(1, 1)).unwrap();
        escape_grid(&rat(0, 1), &w, (6, 4), 20).unwrap()
    }

    #[test]
    fn pgm_layout() {
        let g = small_grid();
        let bytes = pgm(&g);
        let header = b"P5\n6 4\n255\n";
        assert_eq!(&bytes[..header.len()], header);
        assert_eq!(bytes.len(), header.len() + 24);
        // cell (3, 1) samples -0.25 + 0.25i, inside the set; (0, 0) escapes at once
        assert_eq!(g.cell_center(3, 1), num_complex::Complex64::new(-0.25, 0.25));
        assert_eq!(bytes[header.len() + 6 + 3], 0);
        assert!(bytes[header.len()] > 200);
    }

    #[test]
    fn csv_has_header_and_one_line_per_cell() {
        let text = String::from_utf8(grid_csv(&small_grid()).unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "row,col,re,im,escape_count,bounded");
        assert_eq!(lines.len(), 25);
    }

    #[test]
    fn tables_align() {
        let t = table(&["n", "value"], &[vec!["1".into(), "a".into()], vec!["10".into(), "bb".into()]]);
        assert_eq!(t, "n   value\n--  -----\n1   a\n10  bb\n");
    }
}
