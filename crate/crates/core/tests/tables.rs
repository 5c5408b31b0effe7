use qhankel::poly::parse_poly;
use qhankel::tables::{check_table, render_text, table_rows, Fixtures};

const TABLE1: [(&str, &str); 3] = [
    ("n=1", "-1/12*x^2 + 1/45"),
    ("n=2", "-1/540*x^6 + 97/18900*x^4 - 11/4725*x^2 + 16/55125"),
    (
        "n=3",
        "1/42000*x^12 - 121/441000*x^10 + 153/154000*x^8 - 17441/12262250*x^6 \
         + 8369/11036025*x^4 - 1632/9634625*x^2 + 256/18883865",
    ),
];

const TABLE2: [(&str, &str); 7] = [
    ("x^6", "-q^3*(1-q)^3*(1+q)*alpha_0^3"),
    ("x^5", "-q^2*(1-q)^3*(1+q)*(1+2*q)*alpha_0^2*alpha_1"),
    (
        "x^4",
        "-q*(1-q)^2*(1+q)*((1+2*q+q^2-q^3)*alpha_0*alpha_1^2-(1+2*q^2)*alpha_0^2*alpha_2)",
    ),
    (
        "x^3",
        "(1-q)^2*(1+q)*((2+q+q^2+2*q^3)*alpha_0*alpha_1*alpha_2-(1-q)*alpha_0^2*alpha_3\
         -(1+2*q+2*q^2+q^3)*alpha_1^3)",
    ),
    (
        "x^2",
        "(1-q)*((1+3*q+q^2-q^3)*alpha_0*alpha_1*alpha_3+(1-q-q^2-q^3-q^4)*alpha_0*alpha_2^2\
         -alpha_0^2*alpha_4-(1+2*q-2*q^3-q^4)*alpha_1^2*alpha_2)",
    ),
    (
        "x^1",
        "-(1-q)*(alpha_0*alpha_1*alpha_4-(1-q^2)*alpha_0*alpha_2*alpha_3+(1+2*q)*alpha_1*alpha_2^2\
         -(1+2*q+q^2)*alpha_1^2*alpha_3)",
    ),
    (
        "x^0",
        "alpha_0*alpha_2*alpha_4-alpha_0*alpha_3^2+2*alpha_1*alpha_2*alpha_3-alpha_1^2*alpha_4-alpha_2^3",
    ),
];

const TABLE3: [(&str, &str); 4] = [
    ("x^3", "-q^2*(1-q)^3*(1+q)*alpha_0*alpha_1*alpha_2"),
    (
        "x^2",
        "q^2*(1-q)^2*(1+q)*((q+q^2)*alpha_0*alpha_1*alpha_3-alpha_0*alpha_2^2-alpha_1^2*alpha_2)",
    ),
    (
        "x^1",
        "-q^2*(1-q)*(q^4*alpha_0*alpha_1*alpha_4-(q^2-q^4)*alpha_0*alpha_2*alpha_3\
         +(1+2*q)*alpha_1*alpha_2^2-(q+2*q^2+q^3)*alpha_1^2*alpha_3)",
    ),
    (
        "x^0",
        "q^3*(q^4*alpha_0*alpha_2*alpha_4-q^3*alpha_0*alpha_3^2+2*q*alpha_1*alpha_2*alpha_3\
         -q^3*alpha_1^2*alpha_4-alpha_2^3)",
    ),
];

fn reference(which: u8) -> &'static [(&'static str, &'static str)] {
    match which {
        1 => &TABLE1,
        2 => &TABLE2,
        _ => &TABLE3,
    }
}

#[test]
fn computed_rows_match_factored_entries() {
    for which in 1..=3 {
        let rows = table_rows(which).unwrap();
        let expected = reference(which);
        assert_eq!(rows.len(), expected.len());
        for (row, (label, text)) in rows.iter().zip(expected) {
            assert_eq!(row.row, *label);
            assert_eq!(
                row.value,
                parse_poly(text).unwrap(),
                "table {which} {label}"
            );
        }
    }
}

#[test]
fn fixtures_match_factored_entries() {
    let fx = Fixtures::builtin();
    for which in 1..=3 {
        let golden = fx.rows(which);
        for ((label, text), (ref_label, ref_text)) in golden.iter().zip(reference(which)) {
            assert_eq!(label, ref_label);
            assert_eq!(parse_poly(text).unwrap(), parse_poly(ref_text).unwrap());
        }
    }
}

#[test]
fn fixture_directory_round_trip() {
    let dir = std::env::temp_dir().join(format!("qhankel-fixtures-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for which in 1..=3u8 {
        let text = render_text(which, &table_rows(which).unwrap());
        std::fs::write(dir.join(format!("table{which}.txt")), text).unwrap();
    }
    let loaded = Fixtures::load(&dir).unwrap();
    assert_eq!(loaded, Fixtures::builtin());
    for which in 1..=3 {
        assert!(check_table(which, &loaded, 3).iter().all(|r| r.pass));
    }
    std::fs::remove_dir_all(&dir).unwrap();
    assert!(Fixtures::load(&dir).is_err());
}
