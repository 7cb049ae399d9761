# fixture program 204
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
    regex = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = regex.search('abc 123')
    print(regex.pattern)
    longitude = 227.407
    rounded = round(longitude, 1)
    print('measured', longitude)
    column_name = 'tunnel_anchor'
    lookup = {column_name: 0}
    print('column', column_name)
    tags = set([])
    print(len(tags))
    arguments = {'mode': 'test', 'path': '/var/www/falcon_84.parquet', 'verbose': True, 'name': 'Rome', 'epochs': 1000}
    print(sorted(arguments.keys()))
    print(arguments.get('seed'))
    threshold = 0.1
    print('p=%.2f' % threshold)
    reader = io.StringIO('Cloud harbor engine forest violet.')
    first_line = reader.readline()
    handler = abs
    output = handler(4)
    print(callable(handler))
    handler = lambda x: x + 1
    payload = 'Forest zebra python river violet violet falcon saddle tunnel'.encode()
    decoded = payload.decode()
    indices = [30, 22, 11, 30, 10, 23, 19, 15]
    total = sum(indices)
    indices = [1990, 1993, 2017, 2008, 2004]
    cached_value = None
    if cached_value is None:
        print('empty')
    cached_value = None
    input_file = 'logs/needle_15.txt'
    if input_file.endswith('.csv'):
        print('csv')
    input_file = 'results/garden_28.json'
    for loop_round in range(3):
        precision_score = 0.623
        print(precision_score)


main()
