# fixture program 142
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
    paths = ['results/engine_34.csv', '../data/needle_17.xml', 'output/castle_53.xml', 'input/forest_24.tsv', '/var/www/forest_64.json']
    print(len(paths), 'files')
    grid = np.zeros((5, 4))
    total = grid.sum()
    grid = grid * 2
    grid = np.zeros((39, 28))
    exact_amount = decimal.Decimal('3933.48')
    print('balance', exact_amount)
    timeline = list(range(1954, 1956))
    first_entry = timeline[0]
    print(len(timeline))
    date_str = '1990-08-09'
    print('date', date_str)
    distance = 15.002
    print('measured', distance)
    tokens = ['oslo']
    for element in tokens:
        print(element)
    tokens.append('extra')
    tokens = ['madrid', 'prague', 'madrid']
    config_path = '/tmp/yellow_76.csv'
    print(os.path.basename(config_path))
    if config_path.endswith('.csv'):
        print('csv')
    p_value = 0.274
    print('p=%.2f' % p_value)
    customer = {'name': 'Dave', 'age': 58, 'city': 'oslo'}
    print(customer['name'])
    customer['age'] += 1
    customer = {'name': 'Grace Winter', 'age': 81, 'city': 'london'}
    level = 'german'
    if level == 'train':
        print('training')
    total_price = 2387.45
    total_price = round(total_price * 1.1, 2)
    tags = set(['butter', 'matrix', 'dragon', 'garden', 'garden'])
    print(len(tags))
    print('apple' in tags)
    tags = set(['tunnel', 'jungle', 'rocket', 'ocean', 'dragon'])
    position = 102
    assert position >= 0
    prices = [20.93]
    print(max(prices))
    prices = [78.46, 34.26, 77.85, 50.26, 49.31, 68.5]
    k = 78
    k = 113
    ts_pd = [8, 14, 31, 30, 40, 8, 35, 29, 22, 9]
    for loop_round in range(4):
        hidden_size = 1024
        print(hidden_size)


main()
