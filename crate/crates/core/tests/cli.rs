use std::process::{Command, Output};

fn framoid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_framoid")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_json() {
    let o = framoid(&["enumerate", "--family", "jdn", "--d", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"family\":\"jdn\",\"d\":2,\"n\":3,\"count\":40,\"predicted\":40,\"match\":true}\n"
    );
}

#[test]
fn enumerate_csv_range() {
    let o = framoid(&["enumerate", "--family", "trn", "--n", "1..4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "family,d,n,count,predicted,match\ntrn,1,1,2,2,true\ntrn,1,2,9,9,true\n\
         trn,1,3,76,76,true\ntrn,1,4,1001,1001,true\n"
    );
}

#[test]
fn normal_form_of_example() {
    let o = framoid(&[
        "normal-form", "--family", "brdn", "--d", "4", "--n", "5", "--word",
        "o2 t2 t1 t3 t2 t4 o1^2 o4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "o2 o5^2 s3 s2 t1 t3 s4 s3 s2 s1 o4\n");
}

#[test]
fn eval_word_reports_loops() {
    let o = framoid(&["eval-word", "--family", "jdn", "--d", "2", "--n", "2", "--word", "t1 o1 t1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("loops: {1:1}\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(framoid(&["enumerate", "--family", "jdn", "--n", "6", "--cap", "10"]).status.code(), Some(3));
    assert_eq!(framoid(&["enumerate", "--family", "nope", "--n", "2"]).status.code(), Some(2));
    assert_eq!(framoid(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        framoid(&["normal-form", "--family", "jdn", "--n", "3", "--word", "s1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--suite", "hom", "--family", "rdn", "--samples", "20", "--format", "json"];
    let (a, b) = (framoid(&args), framoid(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("\"status\":\"pass\""));
}

#[test]
fn cardinality_table() {
    let o = framoid(&["cardinality-table", "--family", "rprimedn", "--d", "2"]);
    assert_eq!(
        stdout(&o),
        "family,d,n,predicted\nrprimedn,2,1,6\nrprimedn,2,2,56\nrprimedn,2,3,688\nrprimedn,2,4,10368\n"
    );
}
