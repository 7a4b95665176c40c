import pytest

from homosyntax.errors import FormatError
from homosyntax.morphology import FormsLexicon, inflect, matches_tag
from homosyntax.pos import PosTag


class TestInflect:
    def test_gender_conversion(self, forms_lexicon):
        assert inflect("profesor", PosTag("NCFS"), forms_lexicon) == "profesora"

    def test_identity_when_tag_satisfied(self, forms_lexicon):
        assert inflect("sol", PosTag("NCMS"), forms_lexicon) == "sol"

    def test_oov(self, forms_lexicon):
        assert inflect("zzzqx", PosTag("NCMS"), forms_lexicon) is None

    def test_number_conversion(self, forms_lexicon):
        assert inflect("luna", PosTag("NCFP"), forms_lexicon) == "lunas"

    def test_verb_number(self, forms_lexicon):
        assert inflect("brilla", PosTag("VMIP"), forms_lexicon) == "brilla"
        # brilla and brillan share the VMIP truncation, so both satisfy it
        assert matches_tag("brillan", PosTag("VMIP"), forms_lexicon)

    def test_adjective_gender(self, forms_lexicon):
        assert inflect("eterno", PosTag("AQ0F"), forms_lexicon) == "eterna"

    def test_output_always_matches(self, forms_lexicon):
        targets = [PosTag(t) for t in ("NCMS", "NCFS", "NCMP", "NCFP",
                                       "AQ0M", "AQ0F", "VMIP", "VMN0")]
        for word in list(forms_lexicon.lemmas_of)[:80]:
            for target in targets:
                got = inflect(word, target, forms_lexicon)
                if got is not None:
                    assert matches_tag(got, target, forms_lexicon)


class TestMatchesTag:
    def test_attested(self, forms_lexicon):
        assert matches_tag("luna", PosTag("NCFS"), forms_lexicon)

    def test_wrong_tag(self, forms_lexicon):
        assert not matches_tag("luna", PosTag("VMIP"), forms_lexicon)

    def test_consistency_law(self, forms_lexicon):
        targets = [PosTag(t) for t in ("NCMS", "NCFS", "AQ0M", "VMIP")]
        for word in list(forms_lexicon.lemmas_of)[:80]:
            for t in targets:
                if matches_tag(word, t, forms_lexicon):
                    assert inflect(word, t, forms_lexicon) == word.lower()

    def test_case_insensitive(self, forms_lexicon):
        assert matches_tag("Luna", PosTag("NCFS"), forms_lexicon)


class TestLoad:
    def test_bad_arity(self, tmp_path):
        p = tmp_path / "forms.tsv"
        p.write_text("luna\tluna\tNCFS000\n")
        with pytest.raises(FormatError):
            FormsLexicon.load(p)

    def test_frequency_tiebreak(self, tmp_path):
        p = tmp_path / "forms.tsv"
        p.write_text(
            "x\txa\tNCFS000\t1\n"
            "x\txb\tNCFS000\t5\n"
            "x\txc\tNCFS000\t5\n"
        )
        lex = FormsLexicon.load(p)
        # highest frequency wins, then lexicographic
        assert inflect("x", PosTag("NCFS"), lex) == "xb"
