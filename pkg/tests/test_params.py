import json

import pytest

from rejsamp.params import (ParameterSet, SecurityLevel, address_counts,
                            builtin_params, is_mersenne, level_from_number)

PUBLISHED = {
    SecurityLevel.SL1: dict(q=127, l=3, V=52, M=18, v=156, m=54,
                            tau=2916, n_prime=2808),
    SecurityLevel.SL3: dict(q=127, l=3, V=76, M=26, v=228, m=78,
                            tau=6123, n_prime=5928),
    SecurityLevel.SL5: dict(q=127, l=3, V=102, M=35, v=306, m=105,
                            tau=11018, n_prime=10710),
}

ADDR_PAIRS = {
    SecurityLevel.SL1: (365, 351),
    SecurityLevel.SL3: (766, 741),
    SecurityLevel.SL5: (1378, 1339),
}


@pytest.mark.parametrize("level", list(SecurityLevel))
def test_builtin_matches_published_values(level):
    p = builtin_params(level)
    for field, want in PUBLISHED[level].items():
        assert getattr(p, field) == want, field


@pytest.mark.parametrize("level", list(SecurityLevel))
def test_address_counts(level):
    assert address_counts(builtin_params(level)) == ADDR_PAIRS[level]


@pytest.mark.parametrize("level", list(SecurityLevel))
def test_at_most_one_partial_word(level):
    p = builtin_params(level)
    assert 0 <= p.tau_addrs * 8 - p.tau < 8
    assert 0 <= p.out_addrs * 8 - p.n_prime < 8


def test_mask_width_for_q127():
    p = builtin_params(SecurityLevel.SL1)
    assert p.mask_bits == 7
    assert all((b & p.q) <= 127 for b in range(256))


def test_required_depth_is_keystream_region():
    assert builtin_params(SecurityLevel.SL5).required_mem_words == 1378
    assert builtin_params(SecurityLevel.SL3).required_mem_words == 766


def test_is_mersenne():
    assert is_mersenne(127) and is_mersenne(7) and is_mersenne(1)
    assert not is_mersenne(126) and not is_mersenne(128) and not is_mersenne(0)


def test_invariant_violations_rejected():
    base = dict(sec_level=SecurityLevel.SL1, q=127, l=3, V=52, M=18,
                v=156, m=54, tau=2916, n_prime=2808, lambda_bits=128)
    with pytest.raises(ValueError):
        ParameterSet(**{**base, "v": 155})
    with pytest.raises(ValueError):
        ParameterSet(**{**base, "n_prime": 2807})
    with pytest.raises(ValueError):
        ParameterSet(**{**base, "q": 126})
    with pytest.raises(ValueError):
        ParameterSet(**{**base, "tau": 2807})  # below n_prime


def test_to_dict_is_json_ready():
    d = builtin_params(SecurityLevel.SL1).to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["sec_level"] == "SL1" and d["tau"] == 2916


def test_level_from_number():
    assert level_from_number(3) is SecurityLevel.SL3
    with pytest.raises(ValueError):
        level_from_number(2)
