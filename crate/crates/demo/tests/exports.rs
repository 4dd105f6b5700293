use palintiple_demo::{classify, family, young_summary, young_svg};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("export returns JSON")
}

#[test]
fn classify_gives_carries() {
    let v = parse(&classify("8,7,1,2@10*4"));
    assert_eq!(v["class"], "symmetric");
    assert_eq!(v["carries"], serde_json::json!([0, 3, 3, 0]));
    assert!(parse(&classify("8,7,1,3@10*4"))["error"].is_string());
}

#[test]
fn family_slider_values() {
    let v = parse(&family("2,1,2,0,1@3*2", "hoey", 0, 2));
    assert_eq!(v["member"]["base"], 22);
    assert_eq!(v["member"]["digits"], serde_json::json!([8, 5, 19, 13, 16, 2]));
    let v = parse(&family("3,1@5*2", "rho-double", 5, 1));
    assert_eq!(v["member"]["digits"], serde_json::json!([5, 1, 0, 1]));
    let v = parse(&family("3,1@5*2", "rho-double", 5, 2));
    assert!(v["member"]["error"].is_string());
    assert!(parse(&family("3,1@5*2", "double", 0, 1))["error"].is_string());
}

#[test]
fn young_exports() {
    let v = parse(&young_summary(9, 10));
    assert_eq!(v["nodes"].as_array().unwrap().len(), 4);
    assert_eq!(v["is_1089"], true);
    let svg = young_svg(2, 5);
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>"));
    assert!(svg.contains(">3,1<"), "{svg}");
    assert!(young_svg(3, 3).contains("invalid parameters"));
}
