#!/usr/bin/env python3
"""Regenerate the bundled tagger/lemmatizer data files.

Writes src/handspeak/nlp/data/tag_lexicon.tsv and lemma_exceptions.tsv from
the curated word lists below. Inflected forms of regular verbs and nouns are
generated; irregulars are listed explicitly. Run from the repo root after
editing the lists.
"""

import os

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "src", "handspeak", "nlp", "data")

# Closed-class words, tagged directly.
CLOSED = {
    "PRP": ["i", "you", "he", "she", "we", "they", "me", "him", "her", "us",
            "them", "it", "myself", "yourself", "himself", "herself", "ourselves",
            "themselves", "itself", "mine", "yours", "his", "hers", "ours", "theirs"],
    "DT": ["a", "an", "the", "this", "that", "these", "those", "some", "any",
           "no", "every", "each", "either", "neither", "all", "both", "another"],
    "IN": ["in", "on", "at", "by", "for", "with", "from", "of", "about", "into",
           "over", "under", "after", "before", "between", "through", "during",
           "against", "without", "within", "until", "since", "near", "behind",
           "above", "below", "if", "because", "while", "although", "unless"],
    "CC": ["and", "or", "but", "nor", "yet"],
    "MD": ["will", "shall", "can", "could", "may", "might", "must", "would", "should"],
    "TO": ["to"],
    "WP": ["who", "whom", "what", "whose", "which"],
    "WRB": ["when", "where", "why", "how"],
    "UH": ["hello", "hi", "hey", "oh", "wow", "ouch", "please", "yes", "no",
           "okay", "ok", "thanks", "goodbye", "bye", "yeah", "hmm"],
    "RB": ["not", "never", "always", "often", "sometimes", "now", "then", "here",
           "there", "very", "too", "also", "again", "soon", "today", "tomorrow",
           "yesterday", "really", "quite", "almost", "already", "still", "just",
           "maybe", "perhaps", "together", "away", "back", "well", "fast",
           "early", "late", "everywhere", "somewhere", "once", "twice"],
    "CD": ["zero", "one", "two", "three", "four", "five", "six", "seven",
           "eight", "nine", "ten", "eleven", "twelve", "twenty", "hundred",
           "thousand", "million", "first", "second", "third"],
}

# be/have/do get explicit per-form tags.
BE_FORMS = [("be", "VB"), ("am", "VBP"), ("is", "VBZ"), ("are", "VBP"),
            ("was", "VBD"), ("were", "VBD"), ("been", "VBN"), ("being", "VBG")]
HAVE_FORMS = [("have", "VBP"), ("has", "VBZ"), ("had", "VBD"), ("having", "VBG")]
DO_FORMS = [("do", "VBP"), ("does", "VBZ"), ("did", "VBD"), ("doing", "VBG"),
            ("done", "VBN")]

# Irregular verbs: base, past, past participle. 3sg and -ing are regular.
IRREGULAR_VERBS = [
    ("eat", "ate", "eaten"), ("go", "went", "gone"), ("come", "came", "come"),
    ("see", "saw", "seen"), ("say", "said", "said"), ("get", "got", "gotten"),
    ("make", "made", "made"), ("know", "knew", "known"), ("take", "took", "taken"),
    ("think", "thought", "thought"), ("give", "gave", "given"),
    ("find", "found", "found"), ("tell", "told", "told"), ("feel", "felt", "felt"),
    ("leave", "left", "left"), ("put", "put", "put"), ("keep", "kept", "kept"),
    ("begin", "began", "begun"), ("bring", "brought", "brought"),
    ("buy", "bought", "bought"), ("run", "ran", "run"), ("sit", "sat", "sat"),
    ("stand", "stood", "stood"), ("lose", "lost", "lost"), ("pay", "paid", "paid"),
    ("meet", "met", "met"), ("set", "set", "set"), ("speak", "spoke", "spoken"),
    ("read", "read", "read"), ("write", "wrote", "written"),
    ("hear", "heard", "heard"), ("hold", "held", "held"), ("let", "let", "let"),
    ("sing", "sang", "sung"), ("swim", "swam", "swum"), ("fall", "fell", "fallen"),
    ("catch", "caught", "caught"), ("teach", "taught", "taught"),
    ("choose", "chose", "chosen"), ("grow", "grew", "grown"),
    ("drink", "drank", "drunk"), ("drive", "drove", "driven"),
    ("fly", "flew", "flown"), ("forget", "forgot", "forgotten"),
    ("sleep", "slept", "slept"), ("send", "sent", "sent"), ("win", "won", "won"),
    ("understand", "understood", "understood"), ("wear", "wore", "worn"),
    ("break", "broke", "broken"), ("build", "built", "built"),
    ("sell", "sold", "sold"), ("spend", "spent", "spent"),
    ("throw", "threw", "thrown"), ("cut", "cut", "cut"), ("hurt", "hurt", "hurt"),
    ("feed", "fed", "fed"), ("ride", "rode", "ridden"), ("rise", "rose", "risen"),
    ("steal", "stole", "stolen"), ("shake", "shook", "shaken"),
]

# Regular verbs.  Doubling-final-consonant verbs are marked with "+".
REGULAR_VERBS = """
ask answer arrive believe belong call carry change clean climb close cook
cry dance decide deliver describe enjoy explain finish follow happen help
hope jump+ act laugh learn like listen live look love move need open paint
play pull push rain remember repeat return save search seem show smile
snow start stay stop+ study talk thank touch travel+ try turn use visit wait
walk want wash watch water wish work worry cough sneeze point sign smell
taste plan+ hug+ drop+ grab+ clap+ ship+ chat+ pin+ beg+ rub+ nod+ pet+
care share stare prepare practice notice promise receive invite welcome
manage arrange create complete continue agree apologize
"""

# Nouns: singular forms; regular plurals are generated.
NOUNS = """
time year day week month morning night afternoon evening hour minute
man woman child person boy girl friend family mother father sister
brother baby parent teacher student doctor nurse police officer driver
dog cat bird fish horse cow animal hand finger arm leg head eye ear nose
mouth face hair foot body heart wrist thumb
house home room door window table chair bed kitchen bathroom school
office shop store market hospital church park street road city town country
car bus train plane bike boat
water milk tea coffee juice rice bread egg meat fruit apple banana orange
vegetable food dinner lunch breakfast sugar salt
book pen paper letter word sentence language sign gesture video camera
phone computer picture music song story game ball toy
money job work name number question answer problem idea thing way side
place end start help bandage
shirt dress shoe hat coat bag
sun moon star sky rain snow wind weather fire tree flower grass garden
color sound light dark noise
love life death health pain fear hope joy anger surprise trouble danger
week weekend birthday holiday
"""

IRREGULAR_PLURALS = [
    ("child", "children"), ("man", "men"), ("woman", "women"),
    ("person", "people"), ("foot", "feet"), ("tooth", "teeth"),
    ("mouse", "mice"), ("goose", "geese"), ("life", "lives"),
    ("leaf", "leaves"), ("knife", "knives"), ("wife", "wives"),
    ("half", "halves"), ("shelf", "shelves"),
]

ADJECTIVES = """
good bad big small large little long short high low old new young happy
sad angry afraid scared careful dangerous safe nervous tired sick healthy
hungry thirsty cold hot warm cool wet dry clean dirty easy hard difficult
simple important possible ready busy free full empty open closed loud quiet
fast slow early late right wrong true false real nice kind mean funny
serious beautiful ugly pretty strong weak rich poor cheap expensive
deaf blind mute sorry glad proud sure certain different same sweet sour
bitter fresh soft heavy dark bright deep shallow thick thin wide narrow
crying mad
"""

ADJ_EXCEPTIONS = [
    ("better", "good"), ("best", "good"), ("worse", "bad"), ("worst", "bad"),
    ("bigger", "big"), ("biggest", "big"), ("happier", "happy"),
    ("happiest", "happy"), ("larger", "large"), ("largest", "large"),
]

DOUBLE_FINAL = set()


def verb_forms(base, doubled=False):
    """(form, tag) pairs for a regular verb's 3sg/-ing/-ed inflections."""
    if base.endswith(("s", "sh", "ch", "x", "z", "o")):
        third = base + "es"
    elif base.endswith("y") and base[-2] not in "aeiou":
        third = base[:-1] + "ies"
    else:
        third = base + "s"
    stem = base + base[-1] if doubled else base
    if base.endswith("e"):
        ing = base + "ing" if base.endswith(("ee", "ye", "oe")) else base[:-1] + "ing"
        past = base + "d"
    elif base.endswith("y") and base[-2] not in "aeiou":
        ing, past = stem + "ing", base[:-1] + "ied"
    else:
        ing, past = stem + "ing", stem + "ed"
    return [(third, "VBZ"), (ing, "VBG"), (past, "VBD")]


def plural(noun):
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def main():
    tags = {}      # word -> tag (first writer wins: closed class beats open)
    lemmas = []    # (form, lemma, pos)

    def put(word, tag):
        tags.setdefault(word, tag)

    for tag, words in CLOSED.items():
        for w in words:
            put(w, tag)
    for w, t in BE_FORMS + HAVE_FORMS + DO_FORMS:
        put(w, t)
    for base, past, part in IRREGULAR_VERBS:
        put(base, "VB")
        put(past, "VBD")
        put(part, "VBN")
        for form, tag in verb_forms(base, base in DOUBLE_FINAL):
            if tag != "VBD":
                put(form, tag)
        lemmas.append((past, base, "v"))
        if part != base:
            lemmas.append((part, base, "v"))

    for tok in REGULAR_VERBS.split():
        doubled = tok.endswith("+")
        base = tok.rstrip("+")
        put(base, "VB")
        for form, tag in verb_forms(base, doubled):
            put(form, tag)

    irregular_singulars = {sg for sg, _ in IRREGULAR_PLURALS}
    for noun in NOUNS.split():
        put(noun, "NN")
        if noun not in irregular_singulars:
            put(plural(noun), "NNS")
    for sg, pl in IRREGULAR_PLURALS:
        put(sg, "NN")
        put(pl, "NNS")
        lemmas.append((pl, sg, "n"))

    for adj in ADJECTIVES.split():
        put(adj, "JJ")
    for form, base in ADJ_EXCEPTIONS:
        put(form, "JJ")
        lemmas.append((form, base, "a"))

    # be/have/do lemma exceptions
    for form, _ in BE_FORMS[1:]:
        lemmas.append((form, "be", "v"))
    for form, _ in HAVE_FORMS[1:]:
        lemmas.append((form, "have", "v"))
    for form, _ in DO_FORMS[1:]:
        lemmas.append((form, "do", "v"))

    os.makedirs(OUT_DIR, exist_ok=True)
    with open(os.path.join(OUT_DIR, "tag_lexicon.tsv"), "w") as f:
        for word in sorted(tags):
            f.write(f"{word}\t{tags[word]}\n")
    seen = set()
    with open(os.path.join(OUT_DIR, "lemma_exceptions.tsv"), "w") as f:
        for form, lemma, pos in sorted(set(lemmas)):
            if (form, pos) in seen or form == lemma:
                continue
            seen.add((form, pos))
            f.write(f"{form}\t{lemma}\t{pos}\n")
    print(f"wrote {len(tags)} lexicon entries, {len(seen)} lemma exceptions")


if __name__ == "__main__":
    main()
