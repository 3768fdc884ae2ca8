//! P-position grids for Version C families, in ASCII, CSV or JSON.
//!
//! * `c_small_piles`: piles of size at most 3; one page per `a3`, rows
//!   `a2`, columns `a1`.
//! * `c_ones_big`: `k` piles of size 1 and one pile of size `n`; rows `n`,
//!   columns `k`.
//!
//! Only P cells are marked. The JSON form can carry a legend layer that
//! annotates exceptional cells.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::classify::version_c::{bounded3_class, Bounded3Class};
use crate::classify::c_ones_big;
use crate::error::Error;
use crate::game::Variant;
use crate::position::{Position, SizeCounts};
use crate::solver::MemoTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridKind {
    SmallPiles,
    OnesBig,
}

impl GridKind {
    pub fn name(self) -> &'static str {
        match self {
            GridKind::SmallPiles => "c_small_piles",
            GridKind::OnesBig => "c_ones_big",
        }
    }

    /// Axis names: page, row, column.
    fn axes(self) -> (Option<&'static str>, &'static str, &'static str) {
        match self {
            GridKind::SmallPiles => (Some("a3"), "a2", "a1"),
            GridKind::OnesBig => (None, "n", "k"),
        }
    }

    fn title(self) -> &'static str {
        match self {
            GridKind::SmallPiles => "Version C, piles of size at most 3",
            GridKind::OnesBig => "Version C, k piles of size 1 and one pile of size n",
        }
    }

    fn position(self, page: u32, row: u32, col: u32) -> Position {
        match self {
            GridKind::SmallPiles => SizeCounts(vec![col, row, page]).to_position(),
            GridKind::OnesBig => Position::canonicalize(std::iter::repeat_n(1, col as usize).chain([row])),
        }
    }
}

impl FromStr for GridKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "c_small_piles" | "small-piles" => Ok(GridKind::SmallPiles),
            "c_ones_big" | "ones-big" => Ok(GridKind::OnesBig),
            _ => Err(Error::InvalidRegion(format!("unknown grid kind {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSource {
    Oracle,
    Classifier,
}

impl FromStr for GridSource {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "oracle" => Ok(GridSource::Oracle),
            "classifier" => Ok(GridSource::Classifier),
            _ => Err(Error::InvalidRegion(format!("unknown grid source {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridFormat {
    Ascii,
    Csv,
    Json,
}

impl FromStr for GridFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ascii" | "text" => Ok(GridFormat::Ascii),
            "csv" => Ok(GridFormat::Csv),
            "json" => Ok(GridFormat::Json),
            _ => Err(Error::InvalidRegion(format!("unknown grid format {s:?}"))),
        }
    }
}

/// Inclusive maxima per axis; `None` makes that axis empty. The page axis
/// is ignored for `c_ones_big`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub max_col: Option<u32>,
    pub max_row: Option<u32>,
    pub max_page: Option<u32>,
}

impl GridBounds {
    pub fn new(max_col: u32, max_row: u32, max_page: u32) -> Self {
        GridBounds { max_col: Some(max_col), max_row: Some(max_row), max_page: Some(max_page) }
    }

    pub fn empty() -> Self {
        GridBounds { max_col: None, max_row: None, max_page: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    kind: GridKind,
    cols: u32,
    rows: u32,
    pages: u32,
    cells: Vec<bool>,
}

fn count(max: Option<u32>) -> u32 {
    max.map_or(0, |m| m + 1)
}

impl Grid {
    /// Builds a grid from a P-predicate on `(page, row, col)`.
    pub fn from_fn(kind: GridKind, bounds: GridBounds, mut is_p: impl FnMut(u32, u32, u32) -> bool) -> Self {
        let cols = count(bounds.max_col);
        let rows = count(bounds.max_row);
        let pages = match kind {
            GridKind::SmallPiles => count(bounds.max_page),
            GridKind::OnesBig => 1,
        };
        let (cols, rows, pages) = if cols == 0 || rows == 0 || pages == 0 { (0, 0, 0) } else { (cols, rows, pages) };
        let mut cells = Vec::with_capacity((cols * rows * pages) as usize);
        for page in 0..pages {
            for row in 0..rows {
                for col in 0..cols {
                    cells.push(is_p(page, row, col));
                }
            }
        }
        Grid { kind, cols, rows, pages, cells }
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_p(&self, page: u32, row: u32, col: u32) -> bool {
        self.cells[((page * self.rows + row) * self.cols + col) as usize]
    }

    /// Cells `(page, row, col)` where the grids differ; grids of different
    /// shape differ everywhere the shapes do not overlap.
    pub fn diff(&self, other: &Grid) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::new();
        for page in 0..self.pages.max(other.pages) {
            for row in 0..self.rows.max(other.rows) {
                for col in 0..self.cols.max(other.cols) {
                    let get = |g: &Grid| {
                        (page < g.pages && row < g.rows && col < g.cols).then(|| g.is_p(page, row, col))
                    };
                    if get(self) != get(other) {
                        out.push((page, row, col));
                    }
                }
            }
        }
        out
    }

    pub fn render(&self, format: GridFormat, legend: bool) -> String {
        match format {
            GridFormat::Ascii => self.ascii(),
            GridFormat::Csv => self.csv(),
            GridFormat::Json => self.json(legend),
        }
    }

    fn ascii(&self) -> String {
        let (page_axis, row_axis, col_axis) = self.kind.axes();
        let mut out = format!("# {}: rows {row_axis}, columns {col_axis}", self.kind.title());
        if let Some(p) = page_axis {
            let _ = write!(out, ", one page per {p}");
        }
        out.push('\n');
        let corner = format!("{row_axis}\\{col_axis}");
        let w = self.cols.saturating_sub(1).to_string().len();
        let lw = corner.len().max(self.rows.saturating_sub(1).to_string().len());
        for page in 0..self.pages {
            if let Some(p) = page_axis {
                let _ = writeln!(out, "\n{p} = {page}");
            }
            let mut header = format!("{corner:>lw$}");
            for c in 0..self.cols {
                let _ = write!(header, " {c:>w$}");
            }
            out.push_str(header.trim_end());
            out.push('\n');
            for row in 0..self.rows {
                let mut line = format!("{row:>lw$}");
                for col in 0..self.cols {
                    let mark = if self.is_p(page, row, col) { "P" } else { "" };
                    let _ = write!(line, " {mark:>w$}");
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        out
    }

    fn csv(&self) -> String {
        let (page_axis, row_axis, _) = self.kind.axes();
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = page_axis.into_iter().map(String::from).collect();
        header.push(row_axis.to_string());
        header.extend((0..self.cols).map(|c| c.to_string()));
        w.write_record(&header).expect("in-memory csv");
        for page in 0..self.pages {
            for row in 0..self.rows {
                let mut rec: Vec<String> = page_axis.map(|_| page.to_string()).into_iter().collect();
                rec.push(row.to_string());
                rec.extend((0..self.cols).map(|c| if self.is_p(page, row, c) { "P".into() } else { String::new() }));
                w.write_record(&rec).expect("in-memory csv");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
    }

    fn json(&self, legend: bool) -> String {
        let (page_axis, row_axis, col_axis) = self.kind.axes();
        let rows_of = |page: u32| -> Vec<Value> {
            (0..self.rows)
                .map(|row| {
                    let p: Vec<u32> = (0..self.cols).filter(|&c| self.is_p(page, row, c)).collect();
                    json!({ "row": row, "p": p })
                })
                .collect()
        };
        let mut doc = json!({
            "kind": self.kind.name(),
            "axes": { "page": page_axis, "row": row_axis, "col": col_axis },
            "cols": (0..self.cols).collect::<Vec<_>>(),
        });
        match self.kind {
            GridKind::SmallPiles => {
                let pages: Vec<Value> = (0..self.pages).map(|pg| json!({ "page": pg, "rows": rows_of(pg) })).collect();
                doc["pages"] = Value::from(pages);
            }
            GridKind::OnesBig => {
                doc["rows"] = Value::from(if self.pages == 0 { Vec::new() } else { rows_of(0) });
            }
        }
        if legend {
            doc["legend"] = Value::from(self.legend());
        }
        let mut s = serde_json::to_string(&doc).expect("json");
        s.push('\n');
        s
    }

    fn legend(&self) -> Vec<Value> {
        let mut out = Vec::new();
        for page in 0..self.pages {
            for row in 0..self.rows {
                for col in 0..self.cols {
                    let mark = match self.kind {
                        GridKind::SmallPiles => match bounded3_class(col, row, page) {
                            Bounded3Class::Star => Some("star"),
                            Bounded3Class::Dagger => Some("dagger"),
                            Bounded3Class::Sporadic => Some("sporadic"),
                            _ => None,
                        },
                        GridKind::OnesBig => (col == 2 * row).then_some("boxed"),
                    };
                    if let Some(m) = mark {
                        let cell = match self.kind {
                            GridKind::SmallPiles => json!([col, row, page]),
                            GridKind::OnesBig => json!([col, row]),
                        };
                        out.push(json!({ "cell": cell, "mark": m }));
                    }
                }
            }
        }
        out
    }
}

/// Fills a grid from the search oracle or from the closed-form rule.
pub fn emit_grid(kind: GridKind, bounds: GridBounds, source: GridSource, memo: &mut MemoTable) -> Result<Grid, Error> {
    let mut err = None;
    let grid = Grid::from_fn(kind, bounds, |page, row, col| match source {
        GridSource::Classifier => match kind {
            GridKind::SmallPiles => bounded3_class(col, row, page).outcome().is_p(),
            GridKind::OnesBig => c_ones_big(col, row).is_p(),
        },
        GridSource::Oracle => match memo.try_outcome(Variant::C, &kind.position(page, row, col)) {
            Ok(o) => o.is_p(),
            Err(e) => {
                err.get_or_insert(e);
                false
            }
        },
    });
    err.map_or(Ok(grid), Err)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn oracle(kind: GridKind, b: GridBounds) -> Grid {
        emit_grid(kind, b, GridSource::Oracle, &mut MemoTable::new()).unwrap()
    }

    #[test]
    fn empty_bounds_give_headers_only() {
        let g = oracle(GridKind::OnesBig, GridBounds::empty());
        assert!(g.is_empty());
        assert_eq!(g.render(GridFormat::Csv, false), "n\n");
        assert_eq!(g.render(GridFormat::Ascii, false).lines().count(), 1);
        let g = oracle(GridKind::SmallPiles, GridBounds::empty());
        assert_eq!(g.render(GridFormat::Csv, false), "a3,a2\n");
        assert!(g.render(GridFormat::Json, true).contains("\"pages\":[]"));
    }

    #[test]
    fn small_ones_big_grid() {
        let g = oracle(GridKind::OnesBig, GridBounds::new(4, 2, 0));
        assert_eq!(g.render(GridFormat::Csv, false), "n,0,1,2,3,4\n0,P,,,P,\n1,,,P,,\n2,P,,,,P\n");
        assert_eq!(g.render(GridFormat::Ascii, false), "# Version C, k piles of size 1 and one pile of size n: rows n, columns k\nn\\k 0 1 2 3 4\n  0 P     P\n  1     P\n  2 P       P\n");
        let c = emit_grid(GridKind::OnesBig, GridBounds::new(12, 6, 0), GridSource::Classifier, &mut MemoTable::new()).unwrap();
        assert!(c.diff(&oracle(GridKind::OnesBig, GridBounds::new(12, 6, 0))).is_empty());
    }

    #[test]
    fn small_piles_page_zero() {
        let g = oracle(GridKind::SmallPiles, GridBounds::new(6, 6, 0));
        // a3 = 0: P exactly where a1 + 2 a2 = 0 mod 3, except the starred cells.
        for a2 in 0..=6 {
            for a1 in 0..=6 {
                assert_eq!(g.is_p(0, a2, a1), bounded3_class(a1, a2, 0).outcome().is_p());
            }
        }
        let j: Value = serde_json::from_str(&g.render(GridFormat::Json, true)).unwrap();
        assert_eq!(j["pages"][0]["rows"][0]["p"], json!([0, 3, 6]));
        assert!(j["legend"].as_array().unwrap().iter().any(|c| c["mark"] == "star"));
    }

    #[test]
    fn diff_handles_shapes() {
        let a = Grid::from_fn(GridKind::OnesBig, GridBounds::new(1, 0, 0), |_, _, _| true);
        let b = Grid::from_fn(GridKind::OnesBig, GridBounds::new(2, 0, 0), |_, _, _| true);
        assert_eq!(a.diff(&b), vec![(0, 0, 2)]);
    }
}
