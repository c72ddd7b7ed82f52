#!/usr/bin/env python3
"""Regenerates nfc_cases.tsv from Python's unicodedata.

Each row is <input>\t<expected NFC> with non-ASCII and combining marks
written as \\uXXXX escapes so the file survives editors that re-normalize.
Run from this directory: python3 gen_nfc_cases.py
"""
import random
import unicodedata


def esc(s: str) -> str:
    out = []
    for ch in s:
        cp = ord(ch)
        if 0x20 <= cp < 0x7F and ch not in "\\\t":
            out.append(ch)
        elif cp <= 0xFFFF:
            out.append("\\u%04x" % cp)
        else:
            out.append("\\U%08x" % cp)
    return "".join(out)


def main() -> None:
    cases = []

    def add(s: str) -> None:
        cases.append((s, unicodedata.normalize("NFC", s)))

    # Dot-below plus tone marks, composed and decomposed, in both mark orders.
    add("ẹ̀")
    add("ẹ̀")
    add("ọ́")
    add("Ọ́")
    add("Ẹ")
    add("ẹ̀")
    add("ẹ̀")

    # Words from the fixture corpus, decomposed.
    words = [
        "Ẹkẹvuọvo", "egbomọphẹ", "Nonẹna",
        "Bẹtẹl", "Ọghẹnẹ", "iyobọ",
        "Èdó", "Ésán", "rriotọ", "udhedhẹ",
    ]
    for w in words:
        add(unicodedata.normalize("NFD", w))
        add(w)  # already NFC: identity

    # Singletons and Hangul.
    add("Å")            # ANGSTROM SIGN -> U+00C5
    add("가")      # Hangul L+V -> syllable
    add("각")
    add("café")   # cafe + combining acute

    # Random combining clusters, fixed seed.
    rng = random.Random(20240229)
    bases = "aeiouAEOUnms"
    marks = ["̀", "́", "̃", "̈", "̌", "̣", "̱"]
    for _ in range(60):
        n = rng.randint(1, 4)
        s = ""
        for _ in range(n):
            s += rng.choice(bases)
            for _ in range(rng.randint(0, 3)):
                s += rng.choice(marks)
        add(s)

    with open("nfc_cases.tsv", "w", encoding="utf-8") as f:
        for inp, out in cases:
            f.write(esc(inp) + "\t" + esc(out) + "\n")
    print("wrote", len(cases), "cases")


if __name__ == "__main__":
    main()
