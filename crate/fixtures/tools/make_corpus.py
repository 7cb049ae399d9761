#!/usr/bin/env python3
"""Generate the fixture corpus: small Python programs and their assignment traces.

Usage: make_corpus.py OUT_DIR [--programs N] [--seed S]

Writes OUT_DIR/programs/prog_NNN.py and OUT_DIR/traces/prog_NNN.jsonl. Each
program is assembled from variable "concepts" (a family of interchangeable
names with a value generator and a few typical uses), then executed with every
plain-name assignment followed by a recording call. The trace lines follow the
nvcheck trace schema.
"""

import argparse
import ast
import json
import os
import random
import subprocess
import sys
import textwrap

WORDS = """apple river stone cloud matrix vector planet garden window silver orange
market number signal summer winter forest report engine bridge castle rocket
python dragon falcon harbor island jungle ladder meadow needle ocean pepper
quartz rabbit saddle tunnel violet wizard yellow zebra anchor butter candle""".split()
FIRST = "alice bob carol dave erin frank grace heidi ivan judy mallory oscar peggy trent victor".split()
CITIES = "berlin paris london madrid rome vienna prague lisbon dublin oslo stockholm warsaw".split()
EXT = ["csv", "txt", "json", "log", "tsv", "parquet", "xml"]


def rword(r):
    return r.choice(WORDS)


def q(s):
    return repr(s)


# --- value generators -------------------------------------------------------

def v_count(r):
    return str(r.choice([r.randint(0, 20), r.randint(20, 500), r.randint(500, 100000)]))


def v_age(r):
    return str(r.randint(1, 95))


def v_year(r):
    return str(r.randint(1950, 2024))


def v_index(r):
    return str(r.randint(0, 300))


def v_size(r):
    return str(2 ** r.randint(3, 12))


def v_epochs(r):
    return str(r.choice([5, 10, 20, 50, 100, 200, 1000, r.randint(1, 300)]))


def v_id(r):
    return str(r.randint(1000, 999999))


def v_prob(r):
    return repr(round(r.random(), r.choice([1, 2, 3, 4])))


def v_rate(r):
    return repr(r.choice([0.1, 0.01, 0.001, 0.0001, 0.05, 0.005, 0.3, 0.9, 0.99, round(r.random() / 10, 4)]))


def v_price(r):
    return repr(round(r.uniform(0.5, 5000), 2))


def v_measure(r):
    return repr(round(r.uniform(-20, 250), r.choice([1, 2, 3])))


def v_ratio(r):
    return repr(round(r.uniform(0, 1), 3))


def v_duration(r):
    return repr(round(r.uniform(0.001, 120), 3))


def v_path(r):
    d = r.choice(["data", "input", "output", "logs", "results", "/tmp", "/var/www", "../data"])
    return q(f"{d}/{rword(r)}_{r.randint(1, 99)}.{r.choice(EXT)}")


def v_url(r):
    return q(f"https://{rword(r)}.{r.choice(['com', 'org', 'io'])}/{rword(r)}/{r.randint(1, 999)}")


def v_person(r):
    return q(r.choice([r.choice(FIRST).title(), r.choice(FIRST).title() + " " + rword(r).title(), r.choice(CITIES).title()]))


def v_text(r):
    n = r.randint(2, 9)
    s = " ".join(rword(r) for _ in range(n))
    return q(s.capitalize() + r.choice([".", "!", "", "?"]))


def v_date(r):
    return q(f"{r.randint(1990, 2024)}-{r.randint(1, 12):02d}-{r.randint(1, 28):02d}")


def v_column(r):
    return q(r.choice([rword(r), rword(r) + "_" + rword(r), rword(r) + "_id"]))


def v_sep(r):
    return q(r.choice([",", ";", "\t", "|", " ", ":"]))


def v_category(r):
    return q(r.choice(["train", "test", "valid", "red", "green", "blue", "active", "pending", "closed", "english", "german", "fast", "slow"]))


def v_secret(r):
    alphabet = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
    return q("".join(r.choice(alphabet) for _ in range(r.randint(8, 32))))


def v_email(r):
    return q(f"{r.choice(FIRST)}.{rword(r)}@{rword(r)}.com")


def v_bool(r):
    return r.choice(["True", "False"])


def v_int_list(r):
    n = r.randint(0, 12)
    base = r.choice([0, 10, 1990, 100])
    return "[" + ", ".join(str(base + r.randint(0, 40)) for _ in range(n)) + "]"


def v_year_list(r):
    start = r.randint(1950, 2015)
    return f"list(range({start}, {start + r.randint(2, 12)}))"


def v_float_list(r):
    n = r.randint(1, 10)
    return "[" + ", ".join(repr(round(r.uniform(0, 100), 2)) for _ in range(n)) + "]"


def v_str_list(r):
    n = r.randint(0, 8)
    pool = r.choice([WORDS, FIRST, CITIES])
    return "[" + ", ".join(q(r.choice(pool)) for _ in range(n)) + "]"


def v_path_list(r):
    n = r.randint(1, 5)
    return "[" + ", ".join(v_path(r) for _ in range(n)) + "]"


def v_records(r):
    n = r.randint(1, 4)
    return "[" + ", ".join(f"({q(rword(r))}, {r.randint(0, 100)})" for _ in range(n)) + "]"


def v_config(r):
    keys = r.sample(["lr", "epochs", "name", "verbose", "path", "seed", "batch_size", "mode"], r.randint(1, 5))
    vals = {"lr": v_rate, "epochs": v_epochs, "name": v_person, "verbose": v_bool, "path": v_path,
            "seed": v_id, "batch_size": v_size, "mode": v_category}
    return "{" + ", ".join(f"{q(k)}: {vals[k](r)}" for k in keys) + "}"


def v_counts_dict(r):
    n = r.randint(0, 6)
    body = "{" + ", ".join(f"{q(rword(r))}: {r.randint(1, 50)}" for _ in range(n)) + "}"
    kind = r.random()
    if kind < 0.15:
        return f"collections.Counter({body})"
    if kind < 0.3:
        return f"collections.defaultdict(int, {body})"
    if kind < 0.38:
        return f"collections.OrderedDict({body})"
    return body


def v_person_dict(r):
    return "{" + f"'name': {v_person(r)}, 'age': {v_age(r)}, 'city': {q(r.choice(CITIES))}" + "}"


def v_point(r):
    return f"({r.randint(-50, 50)}, {r.randint(-50, 50)})"


def v_size_tuple(r):
    return f"({r.choice([32, 64, 128, 224, 256, 640])}, {r.choice([32, 64, 128, 224, 256, 480])})"


def v_rgb(r):
    return f"({r.randint(0, 255)}, {r.randint(0, 255)}, {r.randint(0, 255)})"


def v_matrix(r):
    rows, cols = r.randint(2, 6), r.randint(2, 6)
    kind = r.choice(["zeros", "ones", "rand", "arange", "big"])
    if kind == "zeros":
        return f"np.zeros(({rows}, {cols}))"
    if kind == "ones":
        return f"np.ones(({rows}, {cols}), dtype=int)"
    if kind == "arange":
        return f"np.arange({rows * cols}).reshape({rows}, {cols})"
    if kind == "big":
        return f"np.zeros(({r.randint(30, 60)}, {r.randint(20, 40)}))"
    return f"np.round(np.random.rand({rows}, {cols}), 2)"


def v_vector(r):
    n = r.randint(2, 12)
    return r.choice([f"np.arange({n})", f"np.round(np.linspace(0, 1, {n}), 3)", f"np.array({v_int_list(r)} or [0])"])


def v_set(r):
    n = r.randint(0, 7)
    items = ", ".join(q(rword(r)) for _ in range(n))
    if r.random() < 0.3:
        return f"frozenset([{items}])"
    return f"set([{items}])"


def v_id_set(r):
    return "{" + ", ".join(str(r.randint(1, 500)) for _ in range(r.randint(1, 6))) + "}"


def v_none(r):
    return "None"


def v_model(r):
    return r.choice(["LinearModel(3)", "DecisionTree(depth=4)", "LinearModel(10)"])


def v_datetime(r):
    return r.choice([f"datetime.datetime({r.randint(2000, 2024)}, {r.randint(1, 12)}, {r.randint(1, 28)}, {r.randint(0, 23)}, {r.randint(0, 59)})",
                     f"datetime.date({r.randint(2000, 2024)}, {r.randint(1, 12)}, {r.randint(1, 28)})"])


def v_pattern(r):
    return r.choice(["re.compile(r'\\d+')", "re.compile(r'[a-z]+@[a-z]+\\.com')", "re.compile(r'^\\s*#')"])


def v_handle(r):
    return f"io.StringIO({v_text(r)})"


def v_func(r):
    return r.choice(["lambda x: x * 2", "lambda x: x + 1", "math.sqrt", "abs", "helper"])


def v_deque(r):
    return f"collections.deque({v_int_list(r)}, maxlen=10)"


def v_dir(r):
    return f"pathlib.Path({q(r.choice(['data', 'out', '/tmp', 'models', 'logs']) + '/' + rword(r))})"


def v_bytes(r):
    return f"{q(v_text(r)[1:-1])}.encode()"


def v_decimal(r):
    return f"decimal.Decimal({q(str(round(r.uniform(0, 10000), 2)))})"


def v_range(r):
    return f"range({r.randint(0, 5)}, {r.randint(6, 100)})"


def v_frame(r):
    rows = r.randint(2, 5)
    cols = r.sample(["age", "name", "price", "score", "city"], r.randint(1, 3))
    data = {c: [r.randint(0, 99) for _ in range(rows)] for c in cols}
    return f"pd.DataFrame({data!r})"


def v_series(r):
    return f"pd.Series({v_float_list(r)})"


# --- concepts ---------------------------------------------------------------
# (names, generator, uses); in uses {v} is the variable.

CONCEPTS = [
    (["count", "num_items", "item_count", "total_count", "num_rows", "row_count", "n_items", "num_samples", "counter_value"],
     v_count, ["{v} += 1", "print('count:', {v})", "if {v} > 10:\n    print('many')", "assert {v} >= 0"]),
    (["age", "user_age", "person_age", "age_years", "patient_age"], v_age,
     ["if {v} >= 18:\n    print('adult')", "print('age', {v})", "age_group = {v} // 10"]),
    (["year", "start_year", "end_year", "birth_year", "current_year", "release_year"], v_year,
     ["print('year', {v})", "decade = {v} - {v} % 10", "if {v} > 2000:\n    print('recent')"]),
    (["index", "idx", "position", "offset", "start_index", "end_index", "row_index"], v_index,
     ["{v} = {v} + 1", "print(sequence_items[{v} % 3])", "assert {v} >= 0"]),
    (["batch_size", "buffer_size", "chunk_size", "window_size", "page_size", "hidden_size", "block_size"], v_size,
     ["num_batches = 1000 // {v}", "print('size', {v})"]),
    (["epochs", "num_epochs", "max_iter", "iterations", "max_steps", "num_steps", "max_retries", "num_iterations"], v_epochs,
     ["for step_number in range(min({v}, 2)):\n    print(step_number)", "print('epochs', {v})"]),
    (["user_id", "customer_id", "order_id", "product_id", "session_id", "random_seed", "account_number"], v_id,
     ["print('id', {v})", "lookup_key = str({v})"]),
    (["probability", "prob", "likelihood", "confidence", "chance", "proba", "threshold", "p_value"], v_prob,
     ["if {v} > 0.5:\n    print('likely')", "{v} = min(1.0, max(0.0, {v}))", "print('p=%.2f' % {v})"]),
    (["learning_rate", "dropout_rate", "decay_rate", "momentum", "weight_decay", "alpha", "epsilon", "smoothing"], v_rate,
     ["print('lr', {v})", "step_value = {v} * 0.5"]),
    (["price", "unit_price", "total_price", "cost", "amount", "salary", "revenue", "total_amount"], v_price,
     ["print('price: $%.2f' % {v})", "tax = {v} * 0.19", "{v} = round({v} * 1.1, 2)"]),
    (["temperature", "height", "weight", "distance", "speed", "latitude", "longitude", "altitude"], v_measure,
     ["print('measured', {v})", "rounded = round({v}, 1)"]),
    (["ratio", "fraction", "percentage", "accuracy", "precision_score", "recall_score", "f1_score", "coverage"], v_ratio,
     ["print('ratio %.3f' % {v})", "if {v} < 0.9:\n    print('low')"]),
    (["elapsed_time", "duration", "elapsed", "timeout_seconds", "delay", "runtime_seconds"], v_duration,
     ["print('took %.2fs' % {v})", "minutes = {v} / 60"]),
    (["file_name", "filename", "file_path", "path", "csv_file", "data_file", "input_file", "output_file", "log_file", "config_path"], v_path,
     ["print(os.path.basename({v}))", "if {v}.endswith('.csv'):\n    print('csv')", "extension = os.path.splitext({v})[1]"]),
    (["url", "base_url", "endpoint", "api_url", "homepage", "website", "download_url"], v_url,
     ["print('GET', {v})", "if {v}.startswith('https'):\n    print('secure')", "host = {v}.split('/')[2]"]),
    (["name", "first_name", "last_name", "user_name", "username", "author", "city", "country", "full_name"], v_person,
     ["print('Hello,', {v})", "initial = {v}[0]", "upper_name = {v}.upper()"]),
    (["text", "message", "sentence", "title", "description", "greeting", "caption", "content_text", "comment"], v_text,
     ["print({v})", "word_list = {v}.split()", "{v} = {v}.strip()"]),
    (["date_str", "date_string", "timestamp_str", "start_date", "end_date", "birthday"], v_date,
     ["year_part = {v}[:4]", "print('date', {v})"]),
    (["column", "col_name", "column_name", "key", "field", "feature_name", "attribute", "target_column"], v_column,
     ["print('column', {v})", "lookup = {{{v}: 0}}"]),
    (["separator", "delimiter", "sep", "line_sep"], v_sep, ["joined = {v}.join(['a', 'b'])"]),
    (["mode", "status", "state", "category", "color", "language", "split_name", "level"], v_category,
     ["if {v} == 'train':\n    print('training')", "print('mode', {v})"]),
    (["password", "token", "api_key", "secret", "access_token", "password_text"], v_secret,
     ["masked = '*' * len({v})", "print('key length', len({v}))"]),
    (["email", "email_address", "contact_email", "sender"], v_email,
     ["domain = {v}.split('@')[1]", "print('mail to', {v})"]),
    (["is_valid", "is_active", "verbose", "debug", "found", "done", "has_header", "shuffle", "is_training", "enabled", "visible", "success", "use_cache"], v_bool,
     ["if {v}:\n    print('yes')", "if not {v}:\n    print('no')", "{v} = not {v}"]),
    (["years", "ages", "scores", "numbers", "counts", "list_of_numbers", "integers", "ids", "indices", "sizes"], v_int_list,
     ["{v}.append(1)", "print(len({v}))", "total = sum({v})", "for element in {v}:\n    print(element)"]),
    (["years", "year_range", "timeline", "periods"], v_year_list, ["print(len({v}))", "first_entry = {v}[0]"]),
    (["prices", "measurements", "temperatures", "distances", "weights_list", "losses", "rewards"], v_float_list,
     ["mean_val = sum({v}) / len({v})", "print(max({v}))", "{v}.sort()"]),
    (["names", "words", "tokens", "columns", "labels", "cities", "stopword_list", "keywords_list", "authors", "sentences"], v_str_list,
     ["print(', '.join({v}))", "{v}.append('extra')", "for element in {v}:\n    print(element)"]),
    (["file_names", "files", "paths", "file_list", "input_files", "log_files"], v_path_list,
     ["for element in {v}:\n    print(os.path.basename(element))", "print(len({v}), 'files')"]),
    (["rows", "records", "items", "entries", "pairs"], v_records,
     ["for element in {v}:\n    print(element[0])", "print(len({v}))"]),
    (["config", "params", "settings", "options", "kwargs", "hyperparams", "arguments"], v_config,
     ["print(sorted({v}.keys()))", "{v}['debug'] = False", "print({v}.get('seed'))"]),
    (["word_counts", "counts_by_word", "frequency", "histogram", "mapping", "lookup_table", "word2idx", "vocab", "token_counts"], v_counts_dict,
     ["{v}['extra'] = 1", "print(len({v}))", "for dict_key in {v}:\n    print(dict_key)"]),
    (["person", "user", "record", "customer", "profile", "employee"], v_person_dict,
     ["print({v}['name'])", "{v}['age'] += 1"]),
    (["point", "coords", "location", "pair_xy", "origin", "center"], v_point,
     ["x_coord, y_coord = {v}", "print('at', {v})"]),
    (["image_size", "resolution", "dimensions", "target_size", "input_shape"], v_size_tuple,
     ["width, height = {v}", "print('size', {v})"]),
    (["rgb", "color_rgb", "background", "foreground"], v_rgb, ["red_channel = {v}[0]"]),
    (["matrix", "weights", "features", "embeddings", "image", "pixels", "grid", "X_train", "X_test", "kernel_matrix", "activations"], v_matrix,
     ["print({v}.shape)", "total = {v}.sum()", "{v} = {v} * 2", "flat = {v}.flatten()"]),
    (["vector", "y_train", "y_test", "targets", "predictions", "preds", "signal", "bias_vector", "probs"], v_vector,
     ["print({v}.mean())", "print({v}.shape)", "{v} = {v} + 1"]),
    (["stopwords", "seen", "visited", "unique_words", "vocabulary_set", "tags", "keywords", "allowed_words"], v_set,
     ["print('apple' in {v})", "print(len({v}))"]),
    (["unique_ids", "seen_ids", "visited_nodes", "selected_ids"], v_id_set, ["{v}.add(7)", "print(len({v}))"]),
    (["result", "previous", "parent", "best_model", "last_error", "cached_value", "current_node", "match"], v_none,
     ["if {v} is None:\n    print('empty')"]),
    (["model", "classifier", "regressor", "estimator", "net", "predictor"], v_model,
     ["prediction = {v}.predict([1, 2, 3])", "print(type({v}).__name__)"]),
    (["start_time", "now", "created_at", "timestamp", "deadline", "start_date_obj", "today"], v_datetime,
     ["print({v}.year)", "iso = {v}.isoformat()"]),
    (["pattern", "regex", "email_pattern", "number_pattern"], v_pattern,
     ["found_match = {v}.search('abc 123')", "print({v}.pattern)"]),
    (["file_handle", "handle", "stream", "buffer_stream", "reader"], v_handle,
     ["first_line = {v}.readline()", "{v}.seek(0)"]),
    (["callback", "handler", "transform", "func", "activation", "preprocess"], v_func,
     ["output = {v}(4)", "print(callable({v}))"]),
    (["queue", "history", "recent_items", "work_queue"], v_deque,
     ["{v}.append(5)", "print(len({v}))"]),
    (["data_dir", "root_dir", "output_dir", "base_dir", "model_dir", "cache_dir"], v_dir,
     ["target_file = {v} / 'out.csv'", "print({v}.name)"]),
    (["payload", "raw_bytes", "encoded", "body_bytes"], v_bytes, ["decoded = {v}.decode()", "print(len({v}))"]),
    (["balance", "account_balance", "exact_amount"], v_decimal, ["print('balance', {v})"]),
    (["frame", "dataframe", "table", "data_frame", "train_frame", "results_table"], v_frame,
     ["print({v}.shape)", "print({v}.columns.tolist())", "{v} = {v}.dropna()"]),
    (["series", "column_values", "price_series"], v_series, ["print({v}.mean())"]),
    (["numbers_range", "index_range", "step_range"], v_range, ["print(list({v})[:3])"]),
]

SHORT_NAMES = [("i", v_index), ("x", v_measure), ("df", v_frame), ("a", v_count), ("ts_pd", v_int_list),
               ("n", v_count), ("k", v_index), ("tmp", v_text), ("s", v_text), ("xy", v_point), ("fn", v_path)]

PRELUDE = """\
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
"""

CLASSES = '''

class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value
'''


def make_program(r, index):
    uses_pandas = r.random() < 0.25
    chosen = r.sample(CONCEPTS, r.randint(9, 15))
    lines = []
    # a small list every "index" concept can subscript
    lines.append("sequence_items = ['first', 'second', 'third']")
    for names, gen, uses in chosen:
        if gen in (v_frame, v_series) and not uses_pandas:
            continue
        name = r.choice(names)
        lines.append(f"{name} = {gen(r)}")
        for use in r.sample(uses, r.randint(1, min(2, len(uses)))):
            lines.append(use.format(v=name))
        if r.random() < 0.25:
            # reassignment with a fresh value of the same concept
            lines.append(f"{name} = {gen(r)}")
    for _ in range(r.randint(0, 3)):
        name, gen = r.choice(SHORT_NAMES)
        if gen in (v_frame,) and not uses_pandas:
            continue
        lines.append(f"{name} = {gen(r)}")
    # a loop body with repeated assignments
    names, gen, _ = r.choice(CONCEPTS[:13])
    loop_name = r.choice(names)
    lines.append(f"for loop_round in range({r.randint(2, 4)}):")
    lines.append(f"    {loop_name} = {gen(r)}")
    lines.append(f"    print({loop_name})")

    header = PRELUDE + ("import pandas as pd\n" if uses_pandas else "") + CLASSES
    body = "\n".join(lines)
    if r.random() < 0.3:
        body = "def main():\n" + textwrap.indent(body, "    ") + "\n\n\nmain()"
    crash = r.random() < 0.04
    if crash:
        body += "\nraise RuntimeError('simulated failure')"
    return f"# fixture program {index:03d}\n" + header + "\n\n" + body + "\n"


# --- recording --------------------------------------------------------------

RECORDER = r'''
import json as __nv_json
import sys as __nv_sys

__nv_out = open(__nv_sys.argv[1], "w", encoding="utf-8")
__nv_seq = [0]
__nv_file = __nv_sys.argv[2]


def __nv_rec(name, value, line):
    try:
        text = str(value)
    except Exception:
        text = "<unprintable:%s>" % type(value).__name__
    text = text[:1000]
    length = None
    try:
        length = len(value)
    except Exception:
        length = None
    shape = None
    try:
        raw = getattr(value, "shape", None)
        if isinstance(raw, tuple) and all(isinstance(d, int) for d in raw):
            shape = [int(d) for d in raw]
    except Exception:
        shape = None
    if shape is not None and (length is None or not shape or shape[0] != length):
        shape = None
    t = type(value)
    record = {
        "name": name,
        "repr": text,
        "type": t.__name__,
        "bases": [c.__name__ for c in t.__mro__[1:] if c is not object],
        "len": length,
        "shape": shape,
        "file": __nv_file,
        "line": line,
        "seq": __nv_seq[0],
    }
    __nv_seq[0] += 1
    __nv_out.write(__nv_json.dumps(record) + "\n")
    __nv_out.flush()
'''


class Instrument(ast.NodeTransformer):
    def _names(self, target):
        if isinstance(target, ast.Name):
            return [target.id]
        if isinstance(target, (ast.Tuple, ast.List)):
            out = []
            for elt in target.elts:
                out.extend(self._names(elt))
            return out
        return []

    def _record(self, node, names):
        calls = [
            ast.Expr(ast.Call(ast.Name("__nv_rec", ast.Load()),
                              [ast.Constant(n), ast.Name(n, ast.Load()), ast.Constant(node.lineno)], []))
            for n in names
        ]
        return [node] + calls

    def visit_Assign(self, node):
        names = []
        for t in node.targets:
            names.extend(self._names(t))
        return self._record(node, names) if names else node

    def visit_AugAssign(self, node):
        return self._record(node, self._names(node.target)) if isinstance(node.target, ast.Name) else node

    def visit_AnnAssign(self, node):
        if node.value is not None and isinstance(node.target, ast.Name):
            return self._record(node, [node.target.id])
        return node

    def visit_FunctionDef(self, node):
        self.generic_visit(node)
        return node


def instrument(source):
    tree = Instrument().visit(ast.parse(source))
    ast.fix_missing_locations(tree)
    return RECORDER + "\n" + ast.unparse(tree) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out")
    ap.add_argument("--programs", type=int, default=260)
    ap.add_argument("--seed", type=int, default=20240517)
    args = ap.parse_args()
    args.out = os.path.abspath(args.out)
    prog_dir = os.path.join(args.out, "programs")
    trace_dir = os.path.join(args.out, "traces")
    os.makedirs(prog_dir, exist_ok=True)
    os.makedirs(trace_dir, exist_ok=True)
    r = random.Random(args.seed)
    total = 0
    for i in range(args.programs):
        src = make_program(r, i)
        stem = f"prog_{i:03d}"
        prog_path = os.path.join(prog_dir, stem + ".py")
        with open(prog_path, "w") as f:
            f.write(src)
        instrumented = os.path.join(args.out, "_instrumented.py")
        with open(instrumented, "w") as f:
            f.write(instrument(src))
        trace_path = os.path.join(trace_dir, stem + ".jsonl")
        env = dict(os.environ, PYTHONHASHSEED="0")
        proc = subprocess.run([sys.executable, instrumented, trace_path, f"programs/{stem}.py"],
                              capture_output=True, text=True, timeout=60, env=env,
                              cwd=args.out)
        with open(trace_path) as f:
            n = sum(1 for _ in f)
        total += n
        if proc.returncode != 0 and "simulated failure" not in proc.stderr:
            print(f"{stem}: exit {proc.returncode}\n{proc.stderr}", file=sys.stderr)
    os.remove(os.path.join(args.out, "_instrumented.py"))
    print(f"{args.programs} programs, {total} records")


if __name__ == "__main__":
    main()
