use serde_json::Value;
use springer_demo::{fixed_points, localize, straighten};

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn lists_fixed_points() {
    let v = parse(fixed_points(4, 2));
    let perms: Vec<Value> = v["points"].as_array().unwrap().iter().map(|p| p["permutation"].clone()).collect();
    assert_eq!(perms.len(), 6);
    assert_eq!(perms[0], serde_json::json!([3, 4, 1, 2]));
    assert!(parse(fixed_points(3, 2))["error"].as_str().unwrap().contains("2k <= n"));
}

#[test]
fn localizes() {
    let v = parse(localize(2, 1, "x1"));
    let values: Vec<&str> = v["values"].as_array().unwrap().iter().map(|e| e["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["2*t", "t"]);
    assert!(parse(localize(2, 1, "x1 +"))["error"].as_str().unwrap().contains("position 4"));
}

#[test]
fn straightens() {
    let v = parse(straighten(2, 1, "x1^2"));
    assert_eq!(v["agree"], Value::Bool(true));
    assert_eq!(v["terms"][0]["tableau"], "[[1,2],[]]");
    assert_eq!(v["terms"][0]["coefficient"], "7*t^2");
    assert_eq!(v["terms"][1]["coefficient"], "-3*t");
}
