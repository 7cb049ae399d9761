# fixture program 094
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
    visited = set(['island', 'silver', 'vector', 'castle', 'yellow', 'ladder', 'signal'])
    print('apple' in visited)
    print(len(visited))
    pixels = np.ones((5, 4), dtype=int)
    pixels = pixels * 2
    secret = 'DteYRlAC3yjaT1tIg39kT2Tc3sREa0q2'
    masked = '*' * len(secret)
    print('key length', len(secret))
    pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    print(pattern.pattern)
    found_match = pattern.search('abc 123')
    classifier = LinearModel(10)
    prediction = classifier.predict([1, 2, 3])
    classifier = DecisionTree(depth=4)
    session_id = 416927
    lookup_key = str(session_id)
    series = pd.Series([84.42, 49.88, 29.6, 27.18, 39.9, 51.46, 44.82, 3.86, 67.5])
    print(series.mean())
    series = pd.Series([77.24, 32.65, 45.09, 6.22, 82.56, 31.36, 88.69, 84.4, 80.0])
    word2idx = {'silver': 25}
    for dict_key in word2idx:
        print(dict_key)
    word2idx = {'engine': 42, 'garden': 37, 'window': 18, 'silver': 23, 'candle': 31, 'saddle': 2}
    full_name = 'Carol'
    print('Hello,', full_name)
    initial = full_name[0]
    full_name = 'Rome'
    i = 105
    x = 206.91
    k = 184
    for loop_round in range(4):
        window_size = 64
        print(window_size)


main()
