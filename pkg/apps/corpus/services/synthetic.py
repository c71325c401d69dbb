"""
Synthetic maritime accident corpus.

Causal sentences join a cause clause and an effect clause with a
connective (transition, conjunction or causal verb). Non-causal sentences
are descriptive report sentences that share the topic vocabulary but never
contain a connective or a form of "cause"/"result".
"""
import logging
from collections import defaultdict

from apps.core.services.random_source import make_rng
from apps.corpus.exceptions import CorpusError

from .corpus_models import CausalLabel, Document, LabeledDataset, LabeledSentence, Sentence

logger = logging.getLogger(__name__)

SENTENCES_PER_REPORT = 20

# =============================================================================
# Causal building blocks
# =============================================================================

CAUSE_CLAUSES = (
    "the fuel filter was blocked",
    "the bilge alarm had been disabled",
    "the steering gear failed",
    "the lookout fell asleep on watch",
    "the cooling water pump stopped",
    "the hatch cover was left open",
    "the mooring line parted",
    "the officer misjudged the passing distance",
    "the exhaust manifold overheated",
    "the ballast valve leaked",
    "the radar was incorrectly tuned",
    "the deck crew ignored the warning signs",
)

# (clause, noun phrase)
EFFECTS = (
    ("the main engine lost power", "a loss of main engine power"),
    ("water flooded the engine room", "flooding of the engine room"),
    ("the vessel drifted aground", "the grounding of the vessel"),
    ("a fire broke out in the engine room", "a fire in the engine room"),
    ("a crew member was injured", "serious injury to a crew member"),
    ("the vessel collided with the trawler", "a collision with the trawler"),
    ("the cargo shifted in the hold", "a dangerous shift of cargo"),
    ("the vessel developed a heavy list", "a heavy list to starboard"),
    ("the lifeboat was damaged", "damage to the lifeboat"),
    ("the tug capsized", "the capsize of the tug"),
)

CAUSAL_TEMPLATES = (
    "{Effect} because {cause}.",
    "{Effect} since {cause}.",
    "{Effect} due to the fact that {cause}.",
    "{Cause}, and as a result {effect}.",
    "{Cause}; consequently, {effect}.",
    "{Cause}, therefore {effect}.",
    "{Cause}, thus {effect}.",
    "{Cause}, which caused {effect_np}.",
    "{Cause}, which resulted in {effect_np}.",
)

# =============================================================================
# Descriptive building blocks
# =============================================================================

DESCRIPTIVE_TEMPLATES = (
    "The {vessel} departed from {port} at {time} with {crew} crew on board.",
    "The {rank} was on watch on the bridge during the {period} watch.",
    "Weather conditions were {weather} and visibility was {visibility}.",
    "The {equipment} had been inspected by the surveyor in {month}.",
    "The {vessel} was built in {year} and registered in {port}.",
    "The crew completed a routine {drill} drill on the main deck.",
    "The {rank} recorded the position in the logbook every hour.",
    "The {vessel} carried a cargo of {cargo} bound for {port}.",
)

SLOTS = {
    "vessel": ("ferry", "trawler", "tanker", "coaster", "tug"),
    "port": ("Dover", "Aberdeen", "Falmouth", "Belfast", "Harwich"),
    "time": ("0400", "0630", "1815", "2200"),
    "crew": ("6", "9", "12", "14"),
    "rank": ("master", "chief officer", "second officer", "deckhand"),
    "period": ("morning", "afternoon", "night"),
    "weather": ("calm", "moderate", "rough", "overcast"),
    "visibility": ("good", "poor", "restricted"),
    "equipment": ("liferaft", "fire pump", "main engine", "radar"),
    "month": ("March", "April", "June", "October"),
    "year": ("1998", "2004", "2011"),
    "drill": ("fire", "abandon ship", "man overboard"),
    "cargo": ("timber", "grain", "steel coils", "containers"),
}


def _capitalize(text: str) -> str:
    return text[:1].upper() + text[1:]


def _causal_sentence(rng, template_index: int) -> str:
    cause = CAUSE_CLAUSES[rng.integers(len(CAUSE_CLAUSES))]
    effect, effect_np = EFFECTS[rng.integers(len(EFFECTS))]
    template = CAUSAL_TEMPLATES[template_index % len(CAUSAL_TEMPLATES)]
    return template.format(
        cause=cause,
        Cause=_capitalize(cause),
        effect=effect,
        Effect=_capitalize(effect),
        effect_np=effect_np,
    )


def _descriptive_sentence(rng, template_index: int) -> str:
    template = DESCRIPTIVE_TEMPLATES[template_index % len(DESCRIPTIVE_TEMPLATES)]
    values = {slot: options[rng.integers(len(options))] for slot, options in SLOTS.items()}
    return template.format(**values)


def generate_synthetic_corpus(n_sentences: int = 200, seed: int = 0) -> LabeledDataset:
    """
    Balanced labeled corpus of `n_sentences`, spread over reports of
    SENTENCES_PER_REPORT sentences named ``synthetic-01``, ``synthetic-02``...
    """
    if n_sentences < 2:
        raise CorpusError("n_sentences must be at least 2")
    rng = make_rng(seed, 2)
    n_causal = n_sentences // 2
    drafts = [
        (_causal_sentence(rng, i), CausalLabel.CAUSAL) for i in range(n_causal)
    ] + [
        (_descriptive_sentence(rng, i), CausalLabel.NON_CAUSAL)
        for i in range(n_sentences - n_causal)
    ]
    order = rng.permutation(len(drafts))

    n_reports = max(1, -(-n_sentences // SENTENCES_PER_REPORT))
    width = max(2, len(str(n_reports)))
    items = []
    for position, draft_index in enumerate(order):
        text, label = drafts[draft_index]
        doc_id = f"synthetic-{position // SENTENCES_PER_REPORT + 1:0{width}d}"
        sentence = Sentence(doc_id=doc_id, index=position % SENTENCES_PER_REPORT, text=text)
        items.append(LabeledSentence(sentence=sentence, label=label))
    logger.info(
        "Generated %d synthetic sentences in %d reports (seed=%d)",
        n_sentences, n_reports, seed,
    )
    return LabeledDataset(items=tuple(items))


def synthetic_reports(dataset: LabeledDataset) -> list[Document]:
    """Report texts whose segmentation gives back the dataset's sentences."""
    grouped: dict[str, list[Sentence]] = defaultdict(list)
    for item in dataset:
        grouped[item.sentence.doc_id].append(item.sentence)
    documents = []
    for doc_id in sorted(grouped):
        sentences = tuple(sorted(grouped[doc_id], key=lambda s: s.index))
        text = " ".join(s.text for s in sentences) + "\n"
        documents.append(Document(id=doc_id, text=text, sentences=sentences))
    return documents
