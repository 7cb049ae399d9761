# fixture program 110
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
    learning_rate = 0.0001
    print('lr', learning_rate)
    step_value = learning_rate * 0.5
    age = 22
    if age >= 18:
        print('adult')
    sep = '|'
    joined = sep.join(['a', 'b'])
    timestamp = datetime.date(2016, 10, 4)
    print(timestamp.year)
    iso = timestamp.isoformat()
    timestamp = datetime.datetime(2018, 4, 9, 9, 56)
    indices = [2011, 1995, 2020, 2004, 2030, 1993, 2011, 2017, 2019]
    for element in indices:
        print(element)
    total = sum(indices)
    estimator = LinearModel(3)
    print(type(estimator).__name__)
    hidden_size = 16
    num_batches = 1000 // hidden_size
    print('size', hidden_size)
    hidden_size = 256
    file_handle = io.StringIO('Falcon tunnel falcon apple yellow python wizard winter harbor.')
    first_line = file_handle.readline()
    prices = [37.84, 39.16, 81.53, 93.19, 47.23]
    print(max(prices))
    num_rows = 5
    if num_rows > 10:
        print('many')
    num_rows = 123
    url = 'https://anchor.io/summer/665'
    host = url.split('/')[2]
    print('GET', url)
    position = 174
    assert position >= 0
    user = {'name': 'Judy Ocean', 'age': 95, 'city': 'london'}
    user['age'] += 1
    user = {'name': 'Frank Forest', 'age': 78, 'city': 'vienna'}
    settings = {'batch_size': 64, 'name': 'Dublin', 'path': 'output/forest_61.txt'}
    print(sorted(settings.keys()))
    settings['debug'] = False
    ts_pd = [10, 30, 11, 28, 27, 28, 19, 40, 6, 17, 16, 14]
    s = 'Tunnel number matrix planet vector?'
    ts_pd = [28, 15, 14, 43, 41, 32]
    for loop_round in range(4):
        decay_rate = 0.3
        print(decay_rate)


main()
