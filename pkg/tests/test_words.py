from jumploci import words


def test_free_reduction_cancels_adjacent_inverses():
    w = words.free_reduce([(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)])
    assert w == ((2, 1),)


def test_cyclic_reduction():
    w = words.free_reduce([(0, 1), (1, 1), (0, -1)])
    assert words.cyclic_reduce(w) == ((1, 1),)
    deep = words.concat(words.generator(0), words.generator(1),
                        words.generator(2), words.inverse(words.generator(1)),
                        words.inverse(words.generator(0)))
    assert words.cyclic_reduce(deep) == ((2, 1),)


def test_inverse_and_concat():
    w = words.concat(words.generator(0), words.generator(1, -1))
    assert words.concat(w, words.inverse(w)) == ()


def test_commutator_expansion():
    a, b = words.generator(0), words.generator(1)
    assert words.commutator(a, b) == ((0, 1), (1, 1), (0, -1), (1, -1))


def test_exponent_sums():
    w = words.concat(words.generator(0, 2), words.generator(1, -3))
    assert words.exponent_sums(w, 3) == [2, -3, 0]


def test_word_to_string_runs():
    w = words.concat(words.generator(0, 2), words.generator(1, -1))
    assert words.word_to_string(w, ("a", "b")) == "a^2 b^-1"
    assert words.word_to_string((), ("a",)) == "1"
