use serde_json::{Map, Value};

/// Output of a command: ordered `key: value` pairs and indented lists.
#[derive(Default)]
pub struct Record {
    items: Vec<(String, Item)>,
}

enum Item {
    Text(String),
    List(Vec<String>),
    /// Printed verbatim without the key in text mode.
    Lines(Vec<String>),
}

impl Record {
    pub fn new() -> Record {
        Record::default()
    }

    pub fn text(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.items.push((key.to_string(), Item::Text(value.to_string())));
        self
    }

    pub fn list<S: ToString>(&mut self, key: &str, values: impl IntoIterator<Item = S>) -> &mut Self {
        self.items.push((key.to_string(), Item::List(values.into_iter().map(|v| v.to_string()).collect())));
        self
    }

    pub fn lines<S: ToString>(&mut self, key: &str, values: impl IntoIterator<Item = S>) -> &mut Self {
        self.items.push((key.to_string(), Item::Lines(values.into_iter().map(|v| v.to_string()).collect())));
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            let mut map = Map::new();
            for (k, v) in &self.items {
                let v = match v {
                    Item::Text(s) => Value::String(s.clone()),
                    Item::List(xs) | Item::Lines(xs) => Value::Array(xs.iter().cloned().map(Value::String).collect()),
                };
                map.insert(k.clone(), v);
            }
            let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("plain strings serialize");
            out.push('\n');
            return out;
        }
        let mut out = String::new();
        for (k, v) in &self.items {
            match v {
                Item::Text(s) => out += &format!("{k}: {s}\n"),
                Item::List(xs) => {
                    out += &format!("{k}:\n");
                    for x in xs {
                        out += &format!("  {x}\n");
                    }
                }
                Item::Lines(xs) => {
                    for x in xs {
                        out += &format!("{x}\n");
                    }
                }
            }
        }
        out
    }
}
