//! Exhaustive geometric enumeration of parallelogram polyominoes and
//! polycubes, independent of every counting formula in this crate.
//!
//! A parallelogram polyomino is stored as the `(bottom, top)` extent of each
//! column; a parallelogram polycube as the `(bottom, top, front, back)`
//! extent of each plateau. Both are normalized so the first slice starts at
//! 0, which quotients out translations. Consecutive slices must overlap
//! (`bottom_{i+1} <= top_i`) so the cells are connected.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::One;

use crate::{BigCount, Error, Result};

pub const MAX_POLYOMINO_AREA: u32 = 14;
pub const MAX_POLYOMINO_EXTENT_SUM: u32 = 14;
pub const MAX_POLYCUBE_VOLUME: u32 = 10;
pub const MAX_POLYCUBE_EXTENT_SUM: u32 = 10;

/// How far an enumeration goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeBound {
    /// Area (polyominoes) or volume (polycubes) at most this.
    Cells(u32),
    /// Sum of the bounding-box extents (width + height, or width + height +
    /// depth) at most this.
    ExtentSum(u32),
}

/// What a tally groups profiles by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classifier {
    WidthArea,
    WidthHeight,
    FixedColumnHeights,
    WidthVolume,
    WidthHeightDepth,
    FixedPlateauVolumes,
}

impl Classifier {
    pub fn name(self) -> &'static str {
        match self {
            Classifier::WidthArea => "width/area",
            Classifier::WidthHeight => "width/height",
            Classifier::FixedColumnHeights => "fixed column heights",
            Classifier::WidthVolume => "width/volume",
            Classifier::WidthHeightDepth => "width/height/depth",
            Classifier::FixedPlateauVolumes => "fixed plateau volumes",
        }
    }
}

/// A profile that can be keyed by some classifiers.
pub trait Profile {
    /// `None` when the classifier does not apply to this kind of profile.
    fn classify(&self, classifier: Classifier) -> Option<Vec<u64>>;
}

/// Counts profiles per classifier key.
pub fn tally<P, I>(stream: I, classifier: Classifier) -> Result<BTreeMap<Vec<u64>, BigCount>>
where
    P: Profile,
    I: IntoIterator<Item = P>,
{
    let mut counts: BTreeMap<Vec<u64>, BigCount> = BTreeMap::new();
    for p in stream {
        let key = p
            .classify(classifier)
            .ok_or(Error::ClassifierMismatch(classifier.name()))?;
        *counts.entry(key).or_default() += BigCount::one();
    }
    Ok(counts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    pub bottom: i64,
    pub top: i64,
}

impl Column {
    pub fn height(&self) -> u64 {
        (self.top - self.bottom + 1) as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnProfile {
    columns: Vec<Column>,
}

impl ColumnProfile {
    /// Normalizes so the first column's bottom is 0 and checks the invariants.
    pub fn new(columns: Vec<Column>) -> Option<Self> {
        let shift = columns.first()?.bottom;
        let columns = columns
            .into_iter()
            .map(|c| Column {
                bottom: c.bottom - shift,
                top: c.top - shift,
            })
            .collect();
        let p = Self { columns };
        p.is_valid().then_some(p)
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn is_valid(&self) -> bool {
        let Some(first) = self.columns.first() else {
            return false;
        };
        first.bottom == 0
            && self.columns.iter().all(|c| c.top >= c.bottom)
            && self.columns.windows(2).all(|w| {
                w[0].bottom <= w[1].bottom && w[0].top <= w[1].top && w[1].bottom <= w[0].top
            })
    }

    pub fn width(&self) -> u64 {
        self.columns.len() as u64
    }

    pub fn area(&self) -> u64 {
        self.columns.iter().map(Column::height).sum()
    }

    pub fn height(&self) -> u64 {
        let last = self.columns.last().expect("nonempty");
        (last.top - self.columns[0].bottom + 1) as u64
    }

    pub fn column_heights(&self) -> Vec<u64> {
        self.columns.iter().map(Column::height).collect()
    }

    /// Cells `(x, y)` with `x` the column index.
    pub fn cells(&self) -> BTreeSet<(i64, i64)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(x, c)| (c.bottom..=c.top).map(move |y| (x as i64, y)))
            .collect()
    }

    /// `#` for a cell, `.` for empty, top row first.
    pub fn render(&self) -> String {
        let cells = self.cells();
        let mut out = String::new();
        for y in (0..self.height() as i64).rev() {
            for x in 0..self.width() as i64 {
                out.push(if cells.contains(&(x, y)) { '#' } else { '.' });
            }
            out.push('\n');
        }
        out
    }
}

impl Profile for ColumnProfile {
    fn classify(&self, classifier: Classifier) -> Option<Vec<u64>> {
        match classifier {
            Classifier::WidthArea => Some(vec![self.width(), self.area()]),
            Classifier::WidthHeight => Some(vec![self.width(), self.height()]),
            Classifier::FixedColumnHeights => Some(self.column_heights()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Plateau {
    pub bottom: i64,
    pub top: i64,
    pub front: i64,
    pub back: i64,
}

impl Plateau {
    pub fn volume(&self) -> u64 {
        ((self.top - self.bottom + 1) * (self.back - self.front + 1)) as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlateauProfile {
    plateaus: Vec<Plateau>,
}

impl PlateauProfile {
    /// Normalizes so the first plateau's bottom and front are 0 and checks
    /// the invariants.
    pub fn new(plateaus: Vec<Plateau>) -> Option<Self> {
        let first = *plateaus.first()?;
        let plateaus = plateaus
            .into_iter()
            .map(|p| Plateau {
                bottom: p.bottom - first.bottom,
                top: p.top - first.bottom,
                front: p.front - first.front,
                back: p.back - first.front,
            })
            .collect();
        let p = Self { plateaus };
        p.is_valid().then_some(p)
    }

    pub fn plateaus(&self) -> &[Plateau] {
        &self.plateaus
    }

    pub fn is_valid(&self) -> bool {
        let Some(first) = self.plateaus.first() else {
            return false;
        };
        first.bottom == 0
            && first.front == 0
            && self
                .plateaus
                .iter()
                .all(|p| p.top >= p.bottom && p.back >= p.front)
            && self.plateaus.windows(2).all(|w| {
                let (a, b) = (w[0], w[1]);
                a.bottom <= b.bottom
                    && a.top <= b.top
                    && a.front <= b.front
                    && a.back <= b.back
                    && b.bottom <= a.top
                    && b.front <= a.back
            })
    }

    pub fn width(&self) -> u64 {
        self.plateaus.len() as u64
    }

    pub fn volume(&self) -> u64 {
        self.plateaus.iter().map(Plateau::volume).sum()
    }

    pub fn height(&self) -> u64 {
        (self.plateaus.last().expect("nonempty").top + 1) as u64
    }

    pub fn depth(&self) -> u64 {
        (self.plateaus.last().expect("nonempty").back + 1) as u64
    }

    pub fn plateau_volumes(&self) -> Vec<u64> {
        self.plateaus.iter().map(Plateau::volume).collect()
    }

    /// Cells `(x, y, z)`: `x` is the plateau index, `y` height, `z` depth.
    pub fn cells(&self) -> BTreeSet<(i64, i64, i64)> {
        let mut out = BTreeSet::new();
        for (x, p) in self.plateaus.iter().enumerate() {
            for y in p.bottom..=p.top {
                for z in p.front..=p.back {
                    out.insert((x as i64, y, z));
                }
            }
        }
        out
    }

    /// One `height x depth` grid per plateau, top row first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (x, p) in self.plateaus.iter().enumerate() {
            let _ = writeln!(out, "plateau {}:", x + 1);
            for y in (0..self.height() as i64).rev() {
                for z in 0..self.depth() as i64 {
                    let inside = (p.bottom..=p.top).contains(&y) && (p.front..=p.back).contains(&z);
                    out.push(if inside { '#' } else { '.' });
                }
                out.push('\n');
            }
        }
        out
    }
}

impl Profile for PlateauProfile {
    fn classify(&self, classifier: Classifier) -> Option<Vec<u64>> {
        match classifier {
            Classifier::WidthVolume => Some(vec![self.width(), self.volume()]),
            Classifier::WidthHeightDepth => Some(vec![self.width(), self.height(), self.depth()]),
            Classifier::FixedPlateauVolumes => Some(self.plateau_volumes()),
            _ => None,
        }
    }
}

/// Every parallelogram polyomino of area at most `max_area`, once each.
pub fn enumerate_polyominoes(max_area: u32) -> Result<std::vec::IntoIter<ColumnProfile>> {
    enumerate_polyominoes_bounded(SizeBound::Cells(max_area))
}

/// Every parallelogram polyomino within `bound`, in strictly increasing
/// lexicographic order of the column sequence.
pub fn enumerate_polyominoes_bounded(
    bound: SizeBound,
) -> Result<std::vec::IntoIter<ColumnProfile>> {
    let (limit, cap) = match bound {
        SizeBound::Cells(n) => (n, MAX_POLYOMINO_AREA),
        SizeBound::ExtentSum(n) => (n, MAX_POLYOMINO_EXTENT_SUM),
    };
    if limit > cap {
        return Err(Error::OracleCapExceeded {
            requested: limit,
            cap,
        });
    }
    let limit = limit as i64;
    // Size of a prefix of `width` columns whose last column is `c` and
    // whose area is `area`.
    let size = |width: usize, area: i64, c: &Column| match bound {
        SizeBound::Cells(_) => area,
        SizeBound::ExtentSum(_) => width as i64 + c.top + 1,
    };

    fn extend(
        prefix: &mut Vec<Column>,
        area: i64,
        limit: i64,
        size: &dyn Fn(usize, i64, &Column) -> i64,
        out: &mut Vec<ColumnProfile>,
    ) {
        let p = ColumnProfile {
            columns: prefix.clone(),
        };
        debug_assert!(p.is_valid());
        out.push(p);
        let last = *prefix.last().expect("nonempty prefix");
        for bottom in last.bottom..=last.top {
            let mut top = last.top;
            loop {
                let c = Column { bottom, top };
                let a = area + c.height() as i64;
                if size(prefix.len() + 1, a, &c) > limit {
                    break;
                }
                prefix.push(c);
                extend(prefix, a, limit, size, out);
                prefix.pop();
                top += 1;
            }
        }
    }

    let mut out = Vec::new();
    let mut top = 0;
    loop {
        let c = Column { bottom: 0, top };
        let a = c.height() as i64;
        if size(1, a, &c) > limit {
            break;
        }
        extend(&mut vec![c], a, limit, &size, &mut out);
        top += 1;
    }
    Ok(out.into_iter())
}

/// Every parallelogram polycube of volume at most `max_volume`, once each.
pub fn enumerate_polycubes(max_volume: u32) -> Result<std::vec::IntoIter<PlateauProfile>> {
    enumerate_polycubes_bounded(SizeBound::Cells(max_volume))
}

/// Every parallelogram polycube within `bound`, in strictly increasing
/// lexicographic order of the plateau sequence.
pub fn enumerate_polycubes_bounded(bound: SizeBound) -> Result<std::vec::IntoIter<PlateauProfile>> {
    let (limit, cap) = match bound {
        SizeBound::Cells(n) => (n, MAX_POLYCUBE_VOLUME),
        SizeBound::ExtentSum(n) => (n, MAX_POLYCUBE_EXTENT_SUM),
    };
    if limit > cap {
        return Err(Error::OracleCapExceeded {
            requested: limit,
            cap,
        });
    }
    let limit = limit as i64;
    let size = |width: usize, volume: i64, p: &Plateau| match bound {
        SizeBound::Cells(_) => volume,
        SizeBound::ExtentSum(_) => width as i64 + p.top + 1 + p.back + 1,
    };

    // Both the volume and the extent sum grow with `top` and with `back`,
    // so each inner loop stops at the first candidate over the limit.
    fn extend(
        prefix: &mut Vec<Plateau>,
        volume: i64,
        limit: i64,
        size: &dyn Fn(usize, i64, &Plateau) -> i64,
        out: &mut Vec<PlateauProfile>,
    ) {
        let p = PlateauProfile {
            plateaus: prefix.clone(),
        };
        debug_assert!(p.is_valid());
        out.push(p);
        let last = *prefix.last().expect("nonempty prefix");
        for bottom in last.bottom..=last.top {
            let mut top = last.top;
            loop {
                let mut any_back = false;
                for front in last.front..=last.back {
                    let mut back = last.back;
                    loop {
                        let p = Plateau {
                            bottom,
                            top,
                            front,
                            back,
                        };
                        let v = volume + p.volume() as i64;
                        if size(prefix.len() + 1, v, &p) > limit {
                            break;
                        }
                        any_back = true;
                        prefix.push(p);
                        extend(prefix, v, limit, size, out);
                        prefix.pop();
                        back += 1;
                    }
                }
                if !any_back {
                    break;
                }
                top += 1;
            }
        }
    }

    let mut out = Vec::new();
    let mut top = 0;
    loop {
        let mut any_back = false;
        let mut back = 0;
        loop {
            let p = Plateau {
                bottom: 0,
                top,
                front: 0,
                back,
            };
            let v = p.volume() as i64;
            if size(1, v, &p) > limit {
                break;
            }
            any_back = true;
            extend(&mut vec![p], v, limit, &size, &mut out);
            back += 1;
        }
        if !any_back {
            break;
        }
        top += 1;
    }
    Ok(out.into_iter())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_where<P: Profile>(stream: impl Iterator<Item = P>, c: Classifier, key: &[u64]) -> u64 {
        let t = tally(stream, c).unwrap();
        t.get(key)
            .map(|v| v.to_string().parse().unwrap())
            .unwrap_or(0)
    }

    #[test]
    fn polyomino_examples() {
        let by_area = |n| {
            enumerate_polyominoes(6)
                .unwrap()
                .filter(|p| p.area() == n)
                .count()
        };
        assert_eq!(by_area(4), 9);
        assert_eq!(
            count_where(
                enumerate_polyominoes(3).unwrap(),
                Classifier::WidthArea,
                &[2, 3]
            ),
            2
        );
        let bounded = enumerate_polyominoes_bounded(SizeBound::ExtentSum(4)).unwrap();
        assert_eq!(count_where(bounded, Classifier::WidthHeight, &[2, 2]), 3);
    }

    #[test]
    fn polycube_examples() {
        let by_volume = |n| {
            enumerate_polycubes(4)
                .unwrap()
                .filter(|p| p.volume() == n)
                .count()
        };
        assert_eq!(by_volume(4), 20);
        assert_eq!(
            count_where(
                enumerate_polycubes(6).unwrap(),
                Classifier::WidthVolume,
                &[1, 6]
            ),
            4
        );
        assert_eq!(
            count_where(
                enumerate_polycubes(4).unwrap(),
                Classifier::FixedPlateauVolumes,
                &[2, 2]
            ),
            6
        );
        let bounded = enumerate_polycubes_bounded(SizeBound::ExtentSum(6)).unwrap();
        assert_eq!(
            count_where(bounded, Classifier::WidthHeightDepth, &[2, 2, 2]),
            9
        );
    }

    #[test]
    fn caps_are_enforced() {
        assert_eq!(
            enumerate_polyominoes(15).err(),
            Some(Error::OracleCapExceeded {
                requested: 15,
                cap: 14
            })
        );
        assert!(enumerate_polycubes(11).is_err());
        assert!(enumerate_polycubes_bounded(SizeBound::ExtentSum(11)).is_err());
    }

    #[test]
    fn emission_order_is_strictly_increasing() {
        let all: Vec<_> = enumerate_polyominoes(9).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(ColumnProfile::is_valid));
        let cubes: Vec<_> = enumerate_polycubes(7).unwrap().collect();
        assert!(cubes.windows(2).all(|w| w[0] < w[1]));
        assert!(cubes.iter().all(PlateauProfile::is_valid));
        let boxed: Vec<_> = enumerate_polycubes_bounded(SizeBound::ExtentSum(8))
            .unwrap()
            .collect();
        assert!(boxed.windows(2).all(|w| w[0] < w[1]));
        assert!(boxed
            .iter()
            .all(|p| p.width() + p.height() + p.depth() <= 8));
    }

    #[test]
    fn classifier_mismatch() {
        let r = tally(enumerate_polyominoes(2).unwrap(), Classifier::WidthVolume);
        assert_eq!(r, Err(Error::ClassifierMismatch("width/volume")));
    }

    #[test]
    fn normalization_and_validation() {
        let shifted = ColumnProfile::new(vec![
            Column { bottom: 3, top: 4 },
            Column { bottom: 4, top: 6 },
        ])
        .unwrap();
        assert_eq!(shifted.columns()[0], Column { bottom: 0, top: 1 });
        assert_eq!(
            (shifted.width(), shifted.area(), shifted.height()),
            (2, 5, 4)
        );
        // Columns that only touch at a corner are not glued.
        assert!(ColumnProfile::new(vec![
            Column { bottom: 0, top: 0 },
            Column { bottom: 1, top: 1 }
        ])
        .is_none());
        // Tops must not decrease.
        assert!(ColumnProfile::new(vec![
            Column { bottom: 0, top: 2 },
            Column { bottom: 0, top: 1 }
        ])
        .is_none());
        let cube = PlateauProfile::new(vec![
            Plateau {
                bottom: 1,
                top: 2,
                front: 5,
                back: 5,
            },
            Plateau {
                bottom: 2,
                top: 2,
                front: 5,
                back: 6,
            },
        ])
        .unwrap();
        assert_eq!((cube.volume(), cube.height(), cube.depth()), (4, 2, 2));
        assert!(PlateauProfile::new(vec![
            Plateau {
                bottom: 0,
                top: 0,
                front: 0,
                back: 0
            },
            Plateau {
                bottom: 0,
                top: 0,
                front: 1,
                back: 1
            },
        ])
        .is_none());
    }

    #[test]
    fn render_grids() {
        let p = ColumnProfile::new(vec![
            Column { bottom: 0, top: 1 },
            Column { bottom: 1, top: 2 },
        ])
        .unwrap();
        assert_eq!(p.render(), ".#\n##\n#.\n");
        let c = PlateauProfile::new(vec![Plateau {
            bottom: 0,
            top: 0,
            front: 0,
            back: 1,
        }])
        .unwrap();
        assert_eq!(c.render(), "plateau 1:\n##\n");
    }
}
