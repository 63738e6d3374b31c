use automata::oracle::words_of_length;
use automata::{ops, Alphabet};
use frameworks::{oracle::satisfies, xor_framework};

/// The abstraction/concretization maps computed by enumeration form a
/// Galois connection at length 2: a constraint set abstracts a
/// configuration set exactly when the configuration set is contained in the
/// constraint set's concretization. The concretization side is evaluated
/// through `interpret`, the abstraction side through transducer runs, so
/// the check also pins both evaluation routes to each other.
#[test]
fn abstraction_and_concretization_form_a_galois_connection_at_length_two() {
    let sigma = Alphabet::new(["t", "n"]).unwrap();
    let f = xor_framework(&sigma).unwrap();
    let constraints = words_of_length(f.gamma(), 2);
    let configs = words_of_length(&sigma, 2);
    assert_eq!(constraints.len(), 16);
    assert_eq!(configs.len(), 4);

    // config_bits[a]: configurations in 𝒱(a), via the interpret route.
    let mut config_bits = vec![0u32; constraints.len()];
    for (ai, a) in constraints.iter().enumerate() {
        let lang = f.interpret(a).unwrap();
        for (ci, c) in configs.iter().enumerate() {
            if ops::accepts(&lang, c).unwrap() {
                config_bits[ai] |= 1 << ci;
            }
        }
    }
    // constraint_bits[c]: constraints satisfied by c, via transducer runs.
    let mut constraint_bits = vec![0u32; configs.len()];
    for (ci, c) in configs.iter().enumerate() {
        for (ai, a) in constraints.iter().enumerate() {
            if satisfies(&f, a, c) {
                constraint_bits[ci] |= 1 << ai;
            }
        }
    }
    for (ai, a) in constraints.iter().enumerate() {
        for (ci, c) in configs.iter().enumerate() {
            assert_eq!(
                config_bits[ai] & (1 << ci) != 0,
                constraint_bits[ci] & (1 << ai) != 0,
                "evaluation routes disagree on a = {}, c = {}",
                f.gamma().render(a),
                sigma.render(c)
            );
        }
    }

    for constraint_set in 0u32..(1 << constraints.len()) {
        for config_set in 0u32..(1 << configs.len()) {
            // constraint_set ⊆ α(config_set): every chosen constraint is
            // satisfied by every chosen configuration.
            let below_alpha = (0..constraints.len())
                .filter(|ai| constraint_set & (1 << ai) != 0)
                .all(|ai| {
                    (0..configs.len())
                        .filter(|ci| config_set & (1 << ci) != 0)
                        .all(|ci| constraint_bits[ci] & (1 << ai) != 0)
                });
            // config_set ⊆ γ(constraint_set), via the other table.
            let below_gamma = (0..configs.len())
                .filter(|ci| config_set & (1 << ci) != 0)
                .all(|ci| {
                    (0..constraints.len())
                        .filter(|ai| constraint_set & (1 << ai) != 0)
                        .all(|ai| config_bits[ai] & (1 << ci) != 0)
                });
            assert_eq!(
                below_alpha, below_gamma,
                "constraint set {constraint_set:#x}, config set {config_set:#x}"
            );
        }
    }
}
