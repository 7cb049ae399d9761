# fixture program 037
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
    category = 'active'
    print('mode', category)
    if category == 'train':
        print('training')
    percentage = 0.969
    print('ratio %.3f' % percentage)
    percentage = 0.689
    years = [49, 23, 37, 14, 36, 15, 36]
    total = sum(years)
    print(len(years))
    exact_amount = decimal.Decimal('213.01')
    print('balance', exact_amount)
    predictions = np.round(np.linspace(0, 1, 7), 3)
    print(predictions.mean())
    print(predictions.shape)
    visited_nodes = {26, 76, 382, 396, 474, 463}
    visited_nodes.add(7)
    content_text = 'Vector candle?'
    print(content_text)
    word_list = content_text.split()
    content_text = 'Rabbit zebra'
    max_iter = 20
    for step_number in range(min(max_iter, 2)):
        print(step_number)
    print('epochs', max_iter)
    result = None
    if result is None:
        print('empty')
    result = None
    pairs = [('ocean', 33)]
    print(len(pairs))
    pairs = [('dragon', 60), ('summer', 31), ('quartz', 30), ('anchor', 85)]
    xy = (2, -22)
    for loop_round in range(3):
        timeout_seconds = 44.151
        print(timeout_seconds)


main()
raise RuntimeError('simulated failure')
