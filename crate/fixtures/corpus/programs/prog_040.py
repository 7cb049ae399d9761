# fixture program 040
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
    product_id = 799200
    lookup_key = str(product_id)
    print('id', product_id)
    input_files = ['input/stone_70.json', 'input/python_37.csv', 'data/orange_92.txt']
    for element in input_files:
        print(os.path.basename(element))
    encoded = 'Butter quartz wizard pepper rabbit orange?'.encode()
    print(len(encoded))
    person_age = 54
    if person_age >= 18:
        print('adult')
    offset = 164
    print(sequence_items[offset % 3])
    timeline = list(range(1988, 1991))
    print(len(timeline))
    timeline = list(range(1953, 1959))
    line_sep = '\t'
    joined = line_sep.join(['a', 'b'])
    stopwords = set(['river', 'planet', 'winter', 'market'])
    print(len(stopwords))
    stopwords = set(['number', 'apple', 'anchor', 'saddle', 'vector'])
    duration = 115.642
    minutes = duration / 60
    duration = 103.568
    location = (-21, -39)
    print('at', location)
    temperatures = [53.31]
    temperatures.sort()
    temperatures = [24.66, 37.84, 69.6, 58.37, 18.89, 40.53, 84.62, 70.76, 16.09, 52.82]
    config = {'mode': 'english', 'seed': 674217, 'lr': 0.005, 'name': 'Peggy Tunnel'}
    print(sorted(config.keys()))
    config = {'seed': 954207, 'batch_size': 1024, 'name': 'Alice Yellow', 'path': 'data/stone_95.csv', 'lr': 0.05}
    exact_amount = decimal.Decimal('4172.55')
    print('balance', exact_amount)
    n = 89478
    k = 232
    k = 181
    for loop_round in range(3):
        page_size = 64
        print(page_size)


main()
