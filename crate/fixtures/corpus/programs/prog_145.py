# fixture program 145
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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


def main():
    sequence_items = ['first', 'second', 'third']
    pairs = [('meadow', 16), ('saddle', 2), ('ladder', 65), ('silver', 64)]
    for element in pairs:
        print(element[0])
    counts_by_word = {'candle': 1, 'castle': 49, 'vector': 22}
    for dict_key in counts_by_word:
        print(dict_key)
    counts_by_word['extra'] = 1
    runtime_seconds = 7.391
    minutes = runtime_seconds / 60
    target_size = (640, 32)
    print('size', target_size)
    output_dir = pathlib.Path('models/matrix')
    print(output_dir.name)
    output_dir = pathlib.Path('data/dragon')
    vocabulary_set = frozenset(['stone', 'pepper', 'rabbit', 'island', 'pepper'])
    print(len(vocabulary_set))
    pattern = re.compile(r'\d+')
    found_match = pattern.search('abc 123')
    website = 'https://summer.io/river/40'
    host = website.split('/')[2]
    if website.startswith('https'):
        print('secure')
    timestamp = datetime.date(2003, 1, 11)
    iso = timestamp.isoformat()
    timestamp = datetime.date(2017, 12, 5)
    token = '2L7QWtdUyh'
    print('key length', len(token))
    token = 'tgoK03jrYxrhvf'
    learning_rate = 0.001
    print('lr', learning_rate)
    total_price = 4653.81
    print('price: $%.2f' % total_price)
    total_price = round(total_price * 1.1, 2)
    sentences = ['dublin', 'prague']
    print(', '.join(sentences))
    recall_score = 0.226
    print('ratio %.3f' % recall_score)
    if recall_score < 0.9:
        print('low')
    recall_score = 0.792
    timeline = list(range(2015, 2021))
    first_entry = timeline[0]
    print(len(timeline))
    timeline = list(range(1983, 1992))
    n = 377
    for loop_round in range(4):
        ratio = 0.168
        print(ratio)


main()
