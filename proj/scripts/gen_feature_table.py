#!/usr/bin/env python3
"""Generate the articulatory feature table shipped under data/.

Writes feature_table.csv (one row per IPA segment, 24 ternary features) and
diacritic_rules.csv (the runtime fallback rules). The segment set is a base
consonant/vowel list expanded with diacritic variants; feature values follow
standard binary-feature conventions, with features that are unspecified for a
segment class held at 0.

Regeneration is deterministic: python3 scripts/gen_feature_table.py
"""

import argparse
import csv
import itertools
import os

FEATURES = [
    "syl", "son", "cons", "cont", "delrel", "lat", "nas", "strid", "voi",
    "sg", "cg", "ant", "cor", "distr", "lab", "hi", "lo", "back", "round",
    "velaric", "tense", "long", "hitone", "hireg",
]

# place -> ant, cor, distr, lab, hi, lo, back
# Body features (hi/lo/back) are specified for dorsals only; glottals carry
# no oral place at all.
PLACES = {
    "bilabial":       (+1, -1, +1, +1, 0, 0, 0),
    "labiodental":    (+1, -1, 0, +1, 0, 0, 0),
    "dental":         (+1, +1, +1, -1, 0, 0, 0),
    "alveolar":       (+1, +1, -1, -1, 0, 0, 0),
    "postalveolar":   (-1, +1, +1, -1, 0, 0, 0),
    "retroflex":      (-1, +1, -1, -1, 0, 0, 0),
    "alveolopalatal": (-1, +1, +1, -1, +1, -1, -1),
    "palatal":        (-1, +1, +1, -1, +1, -1, -1),
    "velar":          (-1, -1, 0, -1, +1, -1, +1),
    "uvular":         (-1, -1, 0, -1, -1, -1, +1),
    "pharyngeal":     (-1, -1, 0, -1, -1, +1, +1),
    "glottal":        (0, -1, 0, -1, 0, 0, 0),
    "labiovelar":     (-1, -1, 0, +1, +1, -1, +1),
    "labiopalatal":   (-1, -1, 0, +1, +1, -1, -1),
}

# manner -> son, cons, cont, delrel, strid, nas, lat   (strid overridden for
# sibilants; sonorants carry strid/delrel 0 where release is inapplicable)
MANNERS = {
    "stop":       (-1, +1, -1, -1, -1, -1, -1),
    "nasal":      (+1, +1, -1, 0, 0, +1, -1),
    "trill":      (+1, +1, +1, -1, 0, -1, -1),
    "tap":        (+1, +1, -1, -1, 0, -1, -1),
    "fric":       (-1, +1, +1, -1, -1, -1, -1),
    "lat_fric":   (-1, +1, +1, -1, -1, -1, +1),
    "affric":     (-1, +1, -1, +1, -1, -1, -1),
    "approx":     (+1, +1, +1, -1, 0, -1, -1),
    "lat_approx": (+1, +1, +1, -1, 0, -1, +1),
    "glide":      (+1, -1, +1, -1, 0, -1, -1),
}

CONS_BASE = dict(syl=-1, sg=-1, cg=-1, round=-1, velaric=-1, tense=0,
                 long=-1, hitone=0, hireg=0)

# symbol, place, manner, voiced, sibilant
CONSONANTS = [
    ("p", "bilabial", "stop", False, False),
    ("b", "bilabial", "stop", True, False),
    ("t", "alveolar", "stop", False, False),
    ("d", "alveolar", "stop", True, False),
    ("ʈ", "retroflex", "stop", False, False),
    ("ɖ", "retroflex", "stop", True, False),
    ("c", "palatal", "stop", False, False),
    ("ɟ", "palatal", "stop", True, False),
    ("k", "velar", "stop", False, False),
    ("ɡ", "velar", "stop", True, False),
    ("q", "uvular", "stop", False, False),
    ("ɢ", "uvular", "stop", True, False),
    ("ʡ", "pharyngeal", "stop", False, False),
    ("ʔ", "glottal", "stop", False, False),
    ("m", "bilabial", "nasal", True, False),
    ("ɱ", "labiodental", "nasal", True, False),
    ("n", "alveolar", "nasal", True, False),
    ("ɳ", "retroflex", "nasal", True, False),
    ("ɲ", "palatal", "nasal", True, False),
    ("ŋ", "velar", "nasal", True, False),
    ("ɴ", "uvular", "nasal", True, False),
    ("ʙ", "bilabial", "trill", True, False),
    ("r", "alveolar", "trill", True, False),
    ("ʀ", "uvular", "trill", True, False),
    ("ʜ", "pharyngeal", "trill", False, False),
    ("ʢ", "pharyngeal", "trill", True, False),
    ("ɾ", "alveolar", "tap", True, False),
    ("ɽ", "retroflex", "tap", True, False),
    ("ɺ", "alveolar", "tap", True, False),
    ("ɸ", "bilabial", "fric", False, False),
    ("β", "bilabial", "fric", True, False),
    ("f", "labiodental", "fric", False, True),
    ("v", "labiodental", "fric", True, True),
    ("θ", "dental", "fric", False, False),
    ("ð", "dental", "fric", True, False),
    ("s", "alveolar", "fric", False, True),
    ("z", "alveolar", "fric", True, True),
    ("ʃ", "postalveolar", "fric", False, True),
    ("ʒ", "postalveolar", "fric", True, True),
    ("ʂ", "retroflex", "fric", False, True),
    ("ʐ", "retroflex", "fric", True, True),
    ("ɕ", "alveolopalatal", "fric", False, True),
    ("ʑ", "alveolopalatal", "fric", True, True),
    ("ç", "palatal", "fric", False, False),
    ("ʝ", "palatal", "fric", True, False),
    ("x", "velar", "fric", False, False),
    ("ɣ", "velar", "fric", True, False),
    ("χ", "uvular", "fric", False, False),
    ("ʁ", "uvular", "fric", True, False),
    ("ħ", "pharyngeal", "fric", False, False),
    ("ʕ", "pharyngeal", "fric", True, False),
    ("h", "glottal", "fric", False, False),
    ("ɦ", "glottal", "fric", True, False),
    ("ɬ", "alveolar", "lat_fric", False, False),
    ("ɮ", "alveolar", "lat_fric", True, False),
    ("ts", "alveolar", "affric", False, True),
    ("dz", "alveolar", "affric", True, True),
    ("tʃ", "postalveolar", "affric", False, True),
    ("dʒ", "postalveolar", "affric", True, True),
    ("ʈʂ", "retroflex", "affric", False, True),
    ("ɖʐ", "retroflex", "affric", True, True),
    ("tɕ", "palatal", "affric", False, True),
    ("dʑ", "palatal", "affric", True, True),
    ("pf", "labiodental", "affric", False, True),
    ("tθ", "dental", "affric", False, False),
    ("ʋ", "labiodental", "approx", True, False),
    ("ɹ", "alveolar", "approx", True, False),
    ("ɻ", "retroflex", "approx", True, False),
    ("l", "alveolar", "lat_approx", True, False),
    ("ɭ", "retroflex", "lat_approx", True, False),
    ("ʎ", "palatal", "lat_approx", True, False),
    ("ʟ", "velar", "lat_approx", True, False),
    ("ɫ", "alveolar", "lat_approx", True, False),
    ("j", "palatal", "glide", True, False),
    ("ɰ", "velar", "glide", True, False),
    ("w", "labiovelar", "glide", True, False),
    ("ɥ", "labiopalatal", "glide", True, False),
    ("ʍ", "labiovelar", "glide", False, False),
    ("ɓ", "bilabial", "stop", True, False),
    ("ɗ", "alveolar", "stop", True, False),
    ("ʄ", "palatal", "stop", True, False),
    ("ɠ", "velar", "stop", True, False),
    ("ʛ", "uvular", "stop", True, False),
    ("ʘ", "bilabial", "stop", False, False),
    ("ǀ", "dental", "stop", False, False),
    ("ǃ", "alveolar", "stop", False, False),
    ("ǂ", "palatal", "stop", False, False),
    ("ǁ", "alveolar", "stop", False, False),
]

IMPLOSIVES = {"ɓ", "ɗ", "ʄ", "ɠ", "ʛ"}
CLICKS = {"ʘ", "ǀ", "ǃ", "ǂ", "ǁ"}

VOWEL_BASE = dict(syl=+1, son=+1, cons=-1, cont=+1, delrel=0, lat=-1, nas=-1,
                  strid=0, voi=+1, sg=-1, cg=-1, ant=0, cor=-1, distr=0,
                  lab=-1, velaric=-1, long=-1, hitone=0, hireg=0)

# symbol, hi, lo, backness, round, tense   (low vowels: tense unspecified;
# central vowels pattern with front for backness)
VOWELS = [
    ("i", +1, -1, "front", False, +1),
    ("y", +1, -1, "front", True, +1),
    ("ɨ", +1, -1, "central", False, +1),
    ("ʉ", +1, -1, "central", True, +1),
    ("ɯ", +1, -1, "back", False, +1),
    ("u", +1, -1, "back", True, +1),
    ("ɪ", +1, -1, "front", False, -1),
    ("ʏ", +1, -1, "front", True, -1),
    ("ʊ", +1, -1, "back", True, -1),
    ("e", -1, -1, "front", False, +1),
    ("ø", -1, -1, "front", True, +1),
    ("ɘ", -1, -1, "central", False, +1),
    ("ɵ", -1, -1, "central", True, +1),
    ("ɤ", -1, -1, "back", False, +1),
    ("o", -1, -1, "back", True, +1),
    ("ə", -1, -1, "central", False, -1),
    ("ɛ", -1, -1, "front", False, -1),
    ("œ", -1, -1, "front", True, -1),
    ("ɜ", -1, -1, "central", False, -1),
    ("ɞ", -1, -1, "central", True, -1),
    ("ʌ", -1, -1, "back", False, -1),
    ("ɔ", -1, -1, "back", True, -1),
    ("æ", -1, +1, "front", False, 0),
    ("ɐ", -1, +1, "central", False, 0),
    ("a", -1, +1, "front", False, 0),
    ("ɶ", -1, +1, "front", True, 0),
    ("ɑ", -1, +1, "back", False, 0),
    ("ɒ", -1, +1, "back", True, 0),
]

BACKNESS = {"front": -1, "central": -1, "back": +1}

# diacritic -> (order group, feature edits)
# Order groups fix the canonical mark order inside a generated key.
DIACRITICS = {
    "̪": (0, {"ant": +1, "cor": +1, "distr": +1}),
    "̺": (0, {"distr": -1}),
    "̻": (0, {"distr": +1}),
    "̥": (1, {"voi": -1}),
    "̬": (1, {"voi": +1}),
    "̤": (2, {"sg": +1}),
    "̰": (2, {"cg": +1}),
    "̃": (3, {"nas": +1}),
    "̩": (4, {"syl": +1}),
    "̯": (4, {"syl": -1}),
    "̘": (5, {"tense": +1}),
    "̙": (5, {"tense": -1}),
    "ʲ": (6, {"hi": +1, "lo": -1, "back": -1}),
    "ʷ": (6, {"round": +1, "lab": +1}),
    "ˠ": (6, {"hi": +1, "lo": -1, "back": +1}),
    "ˤ": (6, {"lo": +1, "back": +1}),
    "ʰ": (7, {"sg": +1}),
    "ʱ": (7, {"sg": +1}),
    "ʼ": (7, {"cg": +1, "voi": -1}),
    "ː": (8, {"long": +1}),
}

LARYNGEAL_MARKS = {"̤", "̰", "ʰ", "ʱ", "ʼ"}
EXCLUDED_PAIRS = {frozenset(p) for p in [("ʼ", "̬"), ("ʼ", "̥"), ("̬", "̃")]}


def build_consonants():
    out = {}
    meta = {}
    for sym, place, manner, voiced, sib in CONSONANTS:
        f = dict(CONS_BASE)
        son, cons, cont, delrel, strid, nas, lat = MANNERS[manner]
        ant, cor, distr, lab, hi, lo, back = PLACES[place]
        f.update(son=son, cons=cons, cont=cont, delrel=delrel,
                 strid=+1 if sib else strid, nas=nas, lat=lat,
                 ant=ant, cor=cor, distr=distr, lab=lab,
                 hi=hi, lo=lo, back=back, voi=+1 if voiced else -1)
        if sym in ("h", "ɦ"):
            f.update(son=-1, cons=-1, sg=+1)
        if sym == "ʔ":
            f.update(son=-1, cons=-1, cg=+1)
        if sym in ("w", "ʍ", "ɥ"):
            f["round"] = +1
        if sym == "ʍ":
            f["sg"] = +1
        if sym == "ʋ":
            f["cons"] = -1
        if sym == "ɫ":
            f.update(hi=+1, lo=-1, back=+1)
        if sym in IMPLOSIVES:
            f["cg"] = +1
        if sym in CLICKS:
            f["velaric"] = +1
        if sym == "ǁ":
            f["lat"] = +1
        out[sym] = f
        meta[sym] = dict(kind="cons", place=place, manner=manner,
                         voiced=voiced)
    return out, meta


def build_vowels():
    out = {}
    meta = {}
    for sym, hi, lo, backness, rnd, tense in VOWELS:
        f = dict(VOWEL_BASE)
        f.update(hi=hi, lo=lo, back=BACKNESS[backness],
                 round=+1 if rnd else -1, tense=tense)
        out[sym] = f
        meta[sym] = dict(kind="vowel", place=None, manner=None, voiced=True)
    return out, meta


def applicable_marks(sym, f, m):
    """Diacritics that make sense on this base segment."""
    if sym in CLICKS:
        return ["ː"]
    marks = ["ː"]
    if m["kind"] == "vowel":
        marks += ["̥", "̤", "̰", "̃", "̯"]
        if f["lo"] != +1:
            marks += ["̘", "̙"]
        return marks
    obstruent = m["manner"] in ("stop", "fric", "lat_fric", "affric")
    glottal = m["place"] == "glottal"
    if m["voiced"]:
        marks += ["̥", "̤", "̰"]
        if obstruent and not glottal:
            marks += ["ʱ"]
    else:
        marks += ["̬"]
        if obstruent and not glottal:
            marks += ["ʰ", "ʼ"]
    if not glottal:
        if m["place"] not in ("palatal", "alveolopalatal"):
            marks += ["ʲ"]
        if f["round"] != +1:
            marks += ["ʷ"]
        if m["place"] not in ("velar", "labiovelar"):
            marks += ["ˠ"]
        if m["place"] != "pharyngeal":
            marks += ["ˤ"]
    if m["place"] == "alveolar":
        marks += ["̪", "̺", "̻"]
    if f["son"] == +1 and m["manner"] != "glide":
        marks += ["̩"]
    if f["son"] == +1 and m["manner"] != "nasal":
        marks += ["̃"]
    return marks


def compatible(combo):
    groups = [DIACRITICS[d][0] for d in combo]
    if len(set(groups)) != len(groups):
        return False
    if sum(d in LARYNGEAL_MARKS for d in combo) > 1:
        return False
    for a, b in itertools.combinations(combo, 2):
        if frozenset((a, b)) in EXCLUDED_PAIRS:
            return False
    return True


def expand(table, meta):
    out = dict(table)
    for sym in sorted(table):
        f, m = table[sym], meta[sym]
        marks = applicable_marks(sym, f, m)
        for r in (1, 2, 3):
            for combo in itertools.combinations(marks, r):
                combo = tuple(sorted(combo, key=lambda d: DIACRITICS[d][0]))
                if not compatible(combo):
                    continue
                key = sym + "".join(combo)
                if key in out:
                    continue
                g = dict(f)
                for d in combo:
                    g.update(DIACRITICS[d][1])
                out[key] = g
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default=os.path.join(
        os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data"))
    args = ap.parse_args()

    cons, cmeta = build_consonants()
    vows, vmeta = build_vowels()
    overlap = set(cons) & set(vows)
    assert not overlap, overlap
    base = {**cons, **vows}
    meta = {**cmeta, **vmeta}
    table = expand(base, meta)
    assert len(table) >= 6000, len(table)

    enc = {+1: "+", -1: "-", 0: "0"}
    os.makedirs(args.out_dir, exist_ok=True)
    path = os.path.join(args.out_dir, "feature_table.csv")
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["ipa"] + FEATURES)
        for sym in sorted(table):
            w.writerow([sym] + [enc[table[sym][f]] for f in FEATURES])

    rules = os.path.join(args.out_dir, "diacritic_rules.csv")
    with open(rules, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["diacritic", "feature", "value"])
        w.writerow(["ː", "long", "+"])
        w.writerow(["ʰ", "sg", "+"])
        w.writerow(["̃", "nas", "+"])

    print(f"{path}: {len(table)} segments ({len(base)} base)")
    print(f"{rules}: 3 rules")


if __name__ == "__main__":
    main()
