# fixture program 093
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
    reader = io.StringIO('Falcon needle violet island saddle?')
    reader.seek(0)
    first_line = reader.readline()
    image = np.ones((3, 3), dtype=int)
    image = image * 2
    flat = image.flatten()
    delimiter = '|'
    joined = delimiter.join(['a', 'b'])
    delimiter = ';'
    func = lambda x: x + 1
    output = func(4)
    sender = 'oscar.orange@butter.com'
    domain = sender.split('@')[1]
    print('mail to', sender)
    random_seed = 539564
    print('id', random_seed)
    lookup_key = str(random_seed)
    random_seed = 478590
    root_dir = pathlib.Path('logs/zebra')
    target_file = root_dir / 'out.csv'
    longitude = 95.65
    rounded = round(longitude, 1)
    print('measured', longitude)
    word_counts = collections.defaultdict(int, {'butter': 27, 'yellow': 10, 'orange': 19, 'meadow': 32, 'python': 13, 'harbor': 35})
    print(len(word_counts))
    word_counts['extra'] = 1
    token = 'lcx8KJf7slH9mj582QsEHipaoSkzDR97'
    print('key length', len(token))
    masked = '*' * len(token)
    predictor = DecisionTree(depth=4)
    print(type(predictor).__name__)
    prediction = predictor.predict([1, 2, 3])
    offset = 23
    offset = offset + 1
    print(sequence_items[offset % 3])
    params = {'epochs': 100, 'path': '/tmp/harbor_74.log'}
    print(params.get('seed'))
    entries = [('meadow', 51), ('castle', 58), ('signal', 63)]
    print(len(entries))
    for loop_round in range(2):
        probability = 0.4
        print(probability)


main()
