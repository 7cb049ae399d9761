# fixture program 193
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
    sender = 'dave.yellow@violet.com'
    print('mail to', sender)
    sender = 'carol.cloud@stone.com'
    classifier = DecisionTree(depth=4)
    prediction = classifier.predict([1, 2, 3])
    print(type(classifier).__name__)
    matrix = np.round(np.random.rand(3, 6), 2)
    flat = matrix.flatten()
    total = matrix.sum()
    epsilon = 0.0998
    step_value = epsilon * 0.5
    epsilon = 0.1
    timestamp = datetime.datetime(2003, 10, 21, 20, 49)
    iso = timestamp.isoformat()
    print(timestamp.year)
    balance = decimal.Decimal('2171.18')
    print('balance', balance)
    balance = decimal.Decimal('6860.12')
    fraction = 0.685
    print('ratio %.3f' % fraction)
    if fraction < 0.9:
        print('low')
    fraction = 0.44
    word2idx = {'harbor': 44}
    print(len(word2idx))
    word2idx['extra'] = 1
    names = []
    names.append('extra')
    names = ['berlin', 'lisbon', 'oslo', 'madrid']
    total_amount = 3625.74
    tax = total_amount * 0.19
    log_files = ['results/stone_89.json']
    print(len(log_files), 'files')
    for element in log_files:
        print(os.path.basename(element))
    log_files = ['../data/rabbit_60.tsv']
    rows = [('apple', 98), ('river', 50), ('summer', 56), ('quartz', 43)]
    print(len(rows))
    for element in rows:
        print(element[0])
    ts_pd = [24, 25, 36, 15]
    fn = 'input/winter_13.log'
    a = 18
    for loop_round in range(2):
        threshold = 0.7
        print(threshold)


main()
