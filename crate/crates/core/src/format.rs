//! The `whakit/1` structure-constant file and the module file.
//!
//! A structure file is a JSON object with keys `format`, `field`, `dim`,
//! `basis`, `mult` ([i,j,k,c]: e_i e_j has c at e_k), `unit`, `comult`
//! ([i,j,k,c]: Δ(e_i) has c at e_j⊗e_k), `counit` and an optional dense
//! `antipode` given as rows (row i, column j is the e_i coefficient of
//! S(e_j)). Triples are written sorted, one per line, so that writing a
//! file that was read back reproduces it byte for byte.

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::hopf_modules::WeakHopfModule;
use crate::linalg::Matrix;
use crate::modules::LeftModule;
use crate::wba::WeakBialgebra;
use crate::wha::WeakHopfAlgebra;
use serde_json::{Map, Value};

pub const FORMAT: &str = "whakit/1";

/// A parsed structure file.
#[derive(Clone, Debug)]
pub struct StructureFile<F> {
    pub wba: WeakBialgebra<F>,
    pub antipode: Option<Matrix<F>>,
}

impl<F: Field> StructureFile<F> {
    pub fn into_wha(self) -> Result<WeakHopfAlgebra<F>> {
        match self.antipode {
            Some(s) => WeakHopfAlgebra::new(self.wba, s),
            None => Err(Error::Format("file has no antipode".into())),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn parse(text: &str) -> Result<Map<String, Value>> {
    match serde_json::from_str(text) {
        Ok(Value::Object(m)) => Ok(m),
        Ok(_) => Err(bad("top level must be an object")),
        Err(e) => Err(bad(format!("invalid JSON: {e}"))),
    }
}

/// The field a structure file is written over.
pub fn peek_field(text: &str) -> Result<FieldSpec> {
    let m = parse(text)?;
    let f = m.get("field").ok_or_else(|| bad("missing key \"field\""))?;
    serde_json::from_value(f.clone()).map_err(|e| bad(format!("bad field: {e}")))
}

fn get<'a>(m: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    m.get(key).ok_or_else(|| bad(format!("missing key \"{key}\"")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))
}

fn scalars<F: Field>(v: &Value, len: usize, what: &str) -> Result<Vec<F>> {
    let a = array(v, what)?;
    if a.len() != len {
        return Err(Error::Dimension(format!("{what} has {} entries, expected {len}", a.len())));
    }
    a.iter().map(|x| F::decode(x).map_err(Error::from)).collect()
}

fn triples<F: Field>(v: &Value, what: &str) -> Result<Vec<(usize, usize, usize, F)>> {
    array(v, what)?
        .iter()
        .map(|t| {
            let t = t.as_array().filter(|t| t.len() == 4).ok_or_else(|| bad(format!("{what} entries are [i,j,k,c]")))?;
            let idx = |x: &Value| x.as_u64().map(|u| u as usize).ok_or_else(|| bad(format!("{what} indices must be non-negative integers")));
            Ok((idx(&t[0])?, idx(&t[1])?, idx(&t[2])?, F::decode(&t[3])?))
        })
        .collect()
}

/// Dense matrix given as a list of rows.
pub fn matrix_from_json<F: Field>(v: &Value, rows: usize, cols: usize, what: &str) -> Result<Matrix<F>> {
    let r = array(v, what)?;
    if r.len() != rows {
        return Err(Error::Dimension(format!("{what} has {} rows, expected {rows}", r.len())));
    }
    let data = r.iter().map(|row| scalars(row, cols, what)).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(data))
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array(m.row(i).iter().map(Field::encode).collect())).collect())
}

/// Reads a structure file over `F`; the `field` key must match `F`.
pub fn read<F: Field>(text: &str) -> Result<StructureFile<F>> {
    let m = parse(text)?;
    match get(&m, "format")?.as_str() {
        Some(FORMAT) => {}
        other => return Err(bad(format!("format must be \"{FORMAT}\", found {other:?}"))),
    }
    let spec: FieldSpec = serde_json::from_value(get(&m, "field")?.clone()).map_err(|e| bad(format!("bad field: {e}")))?;
    if spec != F::spec() {
        return Err(bad(format!("file is over {spec}, reader expects {}", F::spec())));
    }
    let dim = get(&m, "dim")?.as_u64().ok_or_else(|| bad("dim must be a non-negative integer"))? as usize;
    let basis = array(get(&m, "basis")?, "basis")?
        .iter()
        .map(|b| b.as_str().map(String::from).ok_or_else(|| bad("basis labels must be strings")))
        .collect::<Result<Vec<_>>>()?;
    if basis.len() != dim {
        return Err(Error::Dimension(format!("basis has {} labels for dim {dim}", basis.len())));
    }
    let mult = triples(get(&m, "mult")?, "mult")?;
    let comult = triples(get(&m, "comult")?, "comult")?;
    let unit = scalars(get(&m, "unit")?, dim, "unit")?;
    let counit = scalars(get(&m, "counit")?, dim, "counit")?;
    let wba = WeakBialgebra::new(basis, mult, unit, comult, counit)?;
    let antipode = match m.get("antipode") {
        None | Some(Value::Null) => None,
        Some(v) => Some(matrix_from_json(v, dim, dim, "antipode")?),
    };
    Ok(StructureFile { wba, antipode })
}

fn line(v: &Value) -> String {
    serde_json::to_string(v).expect("json value serializes")
}

fn block(items: impl Iterator<Item = Value>) -> String {
    let rows: Vec<String> = items.map(|v| format!("    {}", line(&v))).collect();
    if rows.is_empty() {
        "[]".into()
    } else {
        format!("[\n{}\n  ]", rows.join(",\n"))
    }
}

fn entries<F: Field>(t: Vec<(usize, usize, usize, F)>) -> impl Iterator<Item = Value> {
    t.into_iter().map(|(i, j, k, c)| Value::Array(vec![i.into(), j.into(), k.into(), c.encode()]))
}

/// Canonical text of a structure file.
pub fn write<F: Field>(wba: &WeakBialgebra<F>, antipode: Option<&Matrix<F>>) -> String {
    let field = serde_json::to_value(F::spec()).expect("field spec serializes");
    let enc = |v: &[F]| Value::Array(v.iter().map(Field::encode).collect());
    let basis = Value::Array(wba.labels().iter().map(|l| Value::String(l.clone())).collect());
    let mut parts = vec![
        format!("  \"format\": {}", line(&Value::String(FORMAT.into()))),
        format!("  \"field\": {}", line(&field)),
        format!("  \"dim\": {}", wba.dim()),
        format!("  \"basis\": {}", line(&basis)),
        format!("  \"mult\": {}", block(entries(wba.mult_entries()))),
        format!("  \"unit\": {}", line(&enc(wba.unit()))),
        format!("  \"comult\": {}", block(entries(wba.comult_entries()))),
        format!("  \"counit\": {}", line(&enc(wba.counit()))),
    ];
    if let Some(s) = antipode {
        parts.push(format!("  \"antipode\": {}", block((0..s.rows()).map(|i| enc(s.row(i))))));
    }
    format!("{{\n{}\n}}\n", parts.join(",\n"))
}

pub fn write_wha<F: Field>(w: &WeakHopfAlgebra<F>) -> String {
    write(w, Some(w.antipode()))
}

/// A module file: {"dim": m, "action": [one m×m matrix per basis element]}.
/// A weak Hopf module file may carry "action" (left), "right",
/// "right_coaction" and "left_coaction", each a list of `n` matrices; a
/// right coaction lists D_k with δ(m) = Σ_k D_k m ⊗ e_k.
pub fn read_module<F: Field>(text: &str, n: usize) -> Result<LeftModule<F>> {
    let m = parse(text)?;
    let dim = get(&m, "dim")?.as_u64().ok_or_else(|| bad("dim must be a non-negative integer"))? as usize;
    let action = matrices(get(&m, "action")?, n, dim, "action")?;
    LeftModule::new(dim, action)
}

fn matrices<F: Field>(v: &Value, n: usize, dim: usize, what: &str) -> Result<Vec<Matrix<F>>> {
    let a = array(v, what)?;
    if a.len() != n {
        return Err(Error::Dimension(format!("{what} needs {n} matrices, found {}", a.len())));
    }
    a.iter().map(|x| matrix_from_json(x, dim, dim, what)).collect()
}

pub fn write_module<F: Field>(m: &LeftModule<F>) -> String {
    let action = block(m.actions().iter().map(matrix_to_json));
    format!("{{\n  \"dim\": {},\n  \"action\": {}\n}}\n", m.dim(), action)
}

pub fn read_hopf_module<F: Field>(text: &str, n: usize) -> Result<WeakHopfModule<F>> {
    let m = parse(text)?;
    let dim = get(&m, "dim")?.as_u64().ok_or_else(|| bad("dim must be a non-negative integer"))? as usize;
    let opt = |key: &str| -> Result<Option<Vec<Matrix<F>>>> {
        match m.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => matrices(v, n, dim, key).map(Some),
        }
    };
    Ok(WeakHopfModule {
        dim,
        left: opt("action")?,
        right: opt("right")?,
        right_coaction: opt("right_coaction")?,
        left_coaction: opt("left_coaction")?,
    })
}

pub fn write_hopf_module<F: Field>(m: &WeakHopfModule<F>) -> String {
    let mut parts = vec![format!("  \"dim\": {}", m.dim)];
    for (key, part) in [("action", &m.left), ("right", &m.right), ("right_coaction", &m.right_coaction), ("left_coaction", &m.left_coaction)] {
        if let Some(ms) = part {
            parts.push(format!("  \"{key}\": {}", block(ms.iter().map(matrix_to_json))));
        }
    }
    format!("{{\n{}\n}}\n", parts.join(",\n"))
}

/// A vector of scalars, as a JSON array.
pub fn read_vector<F: Field>(text: &str, n: usize) -> Result<Vec<F>> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    scalars(&v, n, "vector")
}

pub fn vector_to_json<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(Field::encode).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use crate::zoo;
    use crate::Q;

    #[test]
    fn z2_round_trip_is_byte_stable() {
        let w = zoo::cyclic_group(2);
        let text = write_wha(&w);
        let back = read::<Q>(&text).unwrap();
        assert_eq!(write(&back.wba, back.antipode.as_ref()), text);
        assert_eq!(back.antipode.as_ref(), Some(w.antipode()));
        assert!(text.starts_with("{\n  \"format\": \"whakit/1\""));
    }

    #[test]
    fn m2q_and_f2m2_round_trip() {
        let w = zoo::m2q();
        let text = write_wha(&w);
        assert_eq!(write_wha(&read::<Q>(&text).unwrap().into_wha().unwrap()), text);
        let w = zoo::f2m2();
        let text = write_wha(&w);
        assert_eq!(peek_field(&text).unwrap(), FieldSpec::Fp { p: 2 });
        assert_eq!(write_wha(&read::<Fp<2>>(&text).unwrap().into_wha().unwrap()), text);
    }

    #[test]
    fn wrong_field_rejected() {
        let text = write_wha(&zoo::cyclic_group(2));
        assert!(matches!(read::<Fp<2>>(&text), Err(Error::Format(_))));
    }

    #[test]
    fn malformed_files_rejected() {
        assert!(read::<Q>("[]").is_err());
        assert!(read::<Q>("{\"format\":\"whakit/0\"}").is_err());
        let text = write_wha(&zoo::cyclic_group(2)).replace("[1,1,0,\"1\"]", "[1,1,7,\"1\"]");
        assert!(matches!(read::<Q>(&text), Err(Error::Dimension(_))));
    }

    #[test]
    fn module_round_trip() {
        let w = zoo::cyclic_group(3);
        let m = crate::modules::regular_module(&w);
        let text = write_module(&m);
        let back = read_module::<Q>(&text, 3).unwrap();
        assert_eq!(back, m);
        assert_eq!(write_module(&back), text);
        let h = crate::hopf_modules::regular_whm(&w);
        let text = write_hopf_module(&h);
        assert_eq!(read_hopf_module::<Q>(&text, 3).unwrap(), h);
    }
}
