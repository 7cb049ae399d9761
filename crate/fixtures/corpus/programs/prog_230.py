# fixture program 230
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
    signal = np.round(np.linspace(0, 1, 11), 3)
    print(signal.shape)
    print(signal.mean())
    resolution = (256, 256)
    width, height = resolution
    print('size', resolution)
    resolution = (224, 32)
    pairs = [('saddle', 2), ('anchor', 63), ('bridge', 10)]
    print(len(pairs))
    pairs = [('zebra', 28)]
    employee = {'name': 'Dave', 'age': 83, 'city': 'berlin'}
    print(employee['name'])
    employee['age'] += 1
    employee = {'name': 'Heidi Bridge', 'age': 68, 'city': 'dublin'}
    vocabulary_set = set(['zebra', 'castle', 'apple', 'matrix', 'yellow', 'garden'])
    print('apple' in vocabulary_set)
    smoothing = 0.0726
    step_value = smoothing * 0.5
    print('lr', smoothing)
    smoothing = 0.0001
    preprocess = abs
    print(callable(preprocess))
    output = preprocess(4)
    preprocess = lambda x: x + 1
    rewards = [71.36, 66.82, 7.07, 83.06, 32.53, 80.6]
    mean_val = sum(rewards) / len(rewards)
    print(max(rewards))
    session_id = 636183
    print('id', session_id)
    lookup_key = str(session_id)
    session_id = 275882
    user_age = 84
    age_group = user_age // 10
    options = {'lr': 0.005, 'path': 'input/summer_41.txt', 'batch_size': 8, 'name': 'Frank', 'verbose': False}
    print(sorted(options.keys()))
    numbers_range = range(1, 93)
    print(list(numbers_range)[:3])
    numbers_range = range(4, 76)
    for loop_round in range(4):
        max_retries = 200
        print(max_retries)


main()
