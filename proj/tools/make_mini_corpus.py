#!/usr/bin/env python3
"""Regenerates data/mini_corpus: 20 short synthetic abstracts with gold keys.

Each abstract is built from a topic (a handful of gold phrases and some
background terms) and a fixed set of sentence templates. Output is fully
determined by the seed below.
"""
import pathlib
import random
import sys

SEED = 20240917

TOPICS = {
    "graph_embedding": (
        ["random walk", "graph embedding", "node representation", "link prediction"],
        ["vertex", "neighborhood", "matrix", "benchmark", "dimension", "sampling", "network", "sparsity"],
    ),
    "speech_recognition": (
        ["speech recognition", "acoustic model", "language model", "word error rate"],
        ["microphone", "speaker", "noise", "decoder", "lattice", "vocabulary", "dataset", "accent"],
    ),
    "protein_folding": (
        ["protein structure", "amino acid", "folding pathway", "energy landscape"],
        ["simulation", "residue", "solvent", "temperature", "crystal", "sequence", "domain", "kinetics"],
    ),
    "image_segmentation": (
        ["image segmentation", "convolutional network", "pixel label", "boundary detection"],
        ["camera", "scene", "object", "texture", "resolution", "annotation", "region", "benchmark"],
    ),
    "query_optimization": (
        ["query optimization", "cost model", "join order", "database engine"],
        ["index", "table", "cardinality", "workload", "planner", "latency", "storage", "statistics"],
    ),
    "malaria_treatment": (
        ["malaria", "drug resistance", "clinical trial", "artemisinin therapy"],
        ["patient", "dose", "village", "mosquito", "parasite", "hospital", "outcome", "region"],
    ),
    "sentiment_analysis": (
        ["sentiment analysis", "product review", "opinion mining", "polarity"],
        ["customer", "lexicon", "rating", "corpus", "emotion", "sentence", "annotator", "domain"],
    ),
    "wireless_scheduling": (
        ["wireless network", "packet scheduling", "channel capacity", "base station"],
        ["antenna", "interference", "throughput", "user", "spectrum", "delay", "protocol", "traffic"],
    ),
    "gene_expression": (
        ["gene expression", "microarray", "transcription factor", "regulatory network"],
        ["tissue", "sample", "cluster", "promoter", "signal", "cell", "marker", "pathway"],
    ),
    "compiler_optimization": (
        ["register allocation", "loop unrolling", "compiler", "instruction scheduling"],
        ["processor", "cache", "benchmark", "code", "pipeline", "branch", "memory", "kernel"],
    ),
    "machine_translation": (
        ["machine translation", "parallel corpus", "attention mechanism", "target language"],
        ["sentence", "grammar", "vocabulary", "dictionary", "phrase", "quality", "reference", "speaker"],
    ),
    "heart_failure": (
        ["heart failure", "blood pressure", "cardiac function", "risk factor"],
        ["patient", "hospital", "age", "diet", "cohort", "symptom", "outcome", "treatment"],
    ),
    "recommender_systems": (
        ["recommender system", "collaborative filtering", "matrix factorization", "user preference"],
        ["item", "rating", "customer", "catalog", "sparsity", "click", "session", "product"],
    ),
    "robot_navigation": (
        ["mobile robot", "path planning", "obstacle avoidance", "sensor fusion"],
        ["map", "camera", "wheel", "corridor", "motion", "controller", "terrain", "position"],
    ),
    "cache_coherence": (
        ["cache coherence", "shared memory", "multicore processor", "directory protocol"],
        ["thread", "latency", "bus", "message", "core", "workload", "bandwidth", "hardware"],
    ),
    "climate_modeling": (
        ["climate model", "ocean temperature", "carbon dioxide", "sea level"],
        ["atmosphere", "ice", "century", "scenario", "region", "rainfall", "forecast", "emission"],
    ),
    "spam_filtering": (
        ["spam filter", "email message", "naive bayes", "feature selection"],
        ["sender", "header", "keyword", "inbox", "token", "attack", "user", "threshold"],
    ),
    "diabetes_screening": (
        ["diabetes", "insulin resistance", "glucose level", "screening test"],
        ["patient", "clinic", "weight", "diet", "cohort", "sample", "age", "physician"],
    ),
    "software_testing": (
        ["test case", "mutation testing", "code coverage", "fault localization"],
        ["program", "developer", "bug", "tool", "module", "suite", "failure", "repository"],
    ),
    "crowd_simulation": (
        ["crowd simulation", "pedestrian dynamics", "agent model", "evacuation"],
        ["building", "exit", "density", "velocity", "scenario", "obstacle", "behavior", "video"],
    ),
}

# {G}: a gold phrase, {B}: a background term.
TEMPLATES = [
    "We study {G} and {B}.",
    "This article presents a new approach to {G} for {B}.",
    "Our method combines {G} with {G}.",
    "The {G} is evaluated on a {B}.",
    "We propose {G} while the {B} remains fixed.",
    "Experiments show that {G} improves {G}.",
    "Prior work on {B} ignores the {G}.",
    "The {B} depends on {G}.",
    "We compare {G} to {B} and {B}.",
    "In this setting {G} reduces the {B}.",
    "A {B} is often used in {G}.",
    "Finally we discuss {G} and its {B}.",
]


def make_document(rng, gold, background):
    sentences = []
    while len(sentences) < 16:
        template = rng.choice(TEMPLATES)
        out = template
        while "{G}" in out:
            out = out.replace("{G}", rng.choice(gold), 1)
        while "{B}" in out:
            out = out.replace("{B}", rng.choice(background), 1)
        sentences.append(out[0].upper() + out[1:])
    return " ".join(sentences) + "\n"


def main(out_dir):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    for doc_id, (gold, background) in TOPICS.items():
        (out / f"{doc_id}.txt").write_text(make_document(rng, gold, background))
        (out / f"{doc_id}.key").write_text("\n".join(gold) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/mini_corpus")
