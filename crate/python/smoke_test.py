"""Smoke test for the golay_array extension module.

Build and install first:
    pip install maturin
    maturin develop --release -m crates/python/Cargo.toml
"""

import golay_array as ga

GOLAY = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def main():
    for v in range(1, 9):
        code = ga.GolayCode(variant=v)
        assert code.weight_distribution() == GOLAY, v
        assert code.verify()["is_golay"], v
        assert code.trellis_profile() == [1, 64, 64, 1], v

    code = ga.GolayCode(p="1101,0111,1110,1011", variant=4)
    assert len(code.generator()) == 12
    msg = "101100111000"
    cw = code.encode(msg)
    assert code.contains(cw)
    flipped = "".join("1" if (b == "0") == (i in (1, 8, 22)) else "0" for i, b in enumerate(cw))
    for decoder in ("ml", "trellis"):
        got, m, dist, _ = code.decode(flipped, decoder)
        assert (got, m, dist) == (cw, msg, 3), decoder

    perms = ga.enumerate_valid_permutations()
    assert len(perms) == 6 and [3, 1, 4, 2] in perms
    table = ga.table1()
    assert table[0] == ("C1", [29, 39, 58, 78, 83, 105, 116, 139, 150, 172, 177, 197, 216, 226])
    assert ga.verify_properties()["all_ok"]
    assert ga.incidence_matrix()["params"] == (8, 56, 14, 2, 2)
    assert ga.to_decimal("10111000") == 29
    assert ga.rank(ga.kronecker(["101", "011"], ga.build_systematic())) == 8
    assert ga.check_turyn_equivalence() and ga.check_forney_equivalence()

    stats = code.simulate(0.05, trials=2000, seed=3)
    assert stats == code.simulate(0.05, trials=2000, seed=3)

    try:
        ga.GolayCode(variant=9)
    except ValueError:
        pass
    else:
        raise AssertionError("variant 9 accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
