# fixture program 153
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
    use_cache = False
    if not use_cache:
        print('no')
    use_cache = not use_cache
    start_date_obj = datetime.date(2024, 4, 8)
    iso = start_date_obj.isoformat()
    print(start_date_obj.year)
    image = np.zeros((43, 34))
    total = image.sum()
    image = image * 2
    estimator = LinearModel(10)
    print(type(estimator).__name__)
    estimator = DecisionTree(depth=4)
    split_name = 'test'
    if split_name == 'train':
        print('training')
    print('mode', split_name)
    activation = helper
    output = activation(4)
    print(callable(activation))
    activation = helper
    price = 2194.59
    price = round(price * 1.1, 2)
    tax = price * 0.19
    targets = np.array([41, 35, 15, 45] or [0])
    print(targets.mean())
    targets = targets + 1
    targets = np.round(np.linspace(0, 1, 6), 3)
    prices = [99.64, 41.67, 26.23, 31.53, 93.23, 76.35, 67.81, 96.31]
    mean_val = sum(prices) / len(prices)
    prices = [49.06, 67.72, 80.9, 74.04, 95.2, 41.6, 30.78, 57.37]
    for loop_round in range(3):
        duration = 67.856
        print(duration)


main()
