# fixture program 247
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
    classifier = LinearModel(3)
    prediction = classifier.predict([1, 2, 3])
    print(type(classifier).__name__)
    numbers_range = range(0, 27)
    print(list(numbers_range)[:3])
    callback = lambda x: x + 1
    output = callback(4)
    created_at = datetime.date(2017, 11, 6)
    print(created_at.year)
    website = 'https://matrix.org/planet/850'
    if website.startswith('https'):
        print('secure')
    host = website.split('/')[2]
    age = 16
    print('age', age)
    age_group = age // 10
    age = 4
    point = (18, 32)
    print('at', point)
    hyperparams = {'mode': 'english', 'lr': 0.0001, 'batch_size': 1024, 'seed': 380392}
    print(hyperparams.get('seed'))
    entries = [('planet', 59), ('tunnel', 64), ('anchor', 75)]
    print(len(entries))
    for element in entries:
        print(element[0])
    stopwords = set(['engine', 'bridge', 'candle', 'castle', 'falcon'])
    print(len(stopwords))
    print('apple' in stopwords)
    probability = 0.3
    print('p=%.2f' % probability)
    probability = min(1.0, max(0.0, probability))
    a = 36
    ts_pd = [114, 128, 137, 132, 108, 102, 106, 121, 138, 133, 111, 111]
    for loop_round in range(2):
        proba = 0.58
        print(proba)


main()
