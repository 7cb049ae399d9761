# fixture program 076
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
    stopword_list = ['warsaw', 'stockholm', 'dublin', 'rome', 'stockholm']
    stopword_list.append('extra')
    stopword_list = ['erin', 'dave', 'carol']
    keywords = set(['meadow', 'number', 'violet', 'pepper', 'violet', 'cloud', 'rabbit'])
    print(len(keywords))
    idx = 230
    idx = idx + 1
    profile = {'name': 'Trent', 'age': 27, 'city': 'london'}
    print(profile['name'])
    kwargs = {'seed': 13252}
    print(kwargs.get('seed'))
    print(sorted(kwargs.keys()))
    kwargs = {'batch_size': 16, 'seed': 317888, 'verbose': False, 'mode': 'test'}
    api_url = 'https://number.io/planet/595'
    print('GET', api_url)
    file_names = ['/tmp/silver_76.xml', '/var/www/river_13.txt', 'data/ocean_25.csv', '/tmp/stone_33.xml', '/var/www/cloud_68.tsv']
    for element in file_names:
        print(os.path.basename(element))
    cache_dir = pathlib.Path('models/candle')
    print(cache_dir.name)
    target_file = cache_dir / 'out.csv'
    now = datetime.datetime(2015, 10, 18, 22, 5)
    iso = now.isoformat()
    print(now.year)
    altitude = 61.215
    print('measured', altitude)
    classifier = LinearModel(3)
    prediction = classifier.predict([1, 2, 3])
    classifier = LinearModel(10)
    years = list(range(1990, 1997))
    first_entry = years[0]
    origin = (35, 1)
    x_coord, y_coord = origin
    selected_ids = {147, 150, 293, 259, 364, 438}
    print(len(selected_ids))
    selected_ids.add(7)
    cost = 1746.78
    tax = cost * 0.19
    print('price: $%.2f' % cost)
    x = 76.2
    for loop_round in range(2):
        threshold = 0.32
        print(threshold)


main()
