# fixture program 252
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
    if use_cache:
        print('yes')
    location = (-13, 41)
    print('at', location)
    location = (-35, 22)
    content_text = 'Tunnel saddle!'
    print(content_text)
    file_list = ['../data/market_16.json', '/var/www/wizard_65.xml', 'data/stone_6.tsv', '/tmp/signal_23.parquet', '/tmp/quartz_9.tsv']
    for element in file_list:
        print(os.path.basename(element))
    print(len(file_list), 'files')
    file_list = ['results/matrix_35.parquet', '/var/www/meadow_29.csv']
    timestamp = datetime.datetime(2002, 6, 9, 13, 29)
    iso = timestamp.isoformat()
    print(timestamp.year)
    timestamp = datetime.date(2023, 1, 1)
    elapsed_time = 103.249
    minutes = elapsed_time / 60
    years = [17, 12, 31, 12, 48]
    print(len(years))
    years = [48, 30, 50, 33, 10]
    regex = re.compile(r'\d+')
    found_match = regex.search('abc 123')
    print(regex.pattern)
    regex = re.compile(r'\d+')
    balance = decimal.Decimal('3744.25')
    print('balance', balance)
    hidden_size = 1024
    print('size', hidden_size)
    num_batches = 1000 // hidden_size
    weight = 19.7
    print('measured', weight)
    max_iter = 100
    print('epochs', max_iter)
    for step_number in range(min(max_iter, 2)):
        print(step_number)
    max_iter = 1000
    birth_year = 2008
    decade = birth_year - birth_year % 10
    print('year', birth_year)
    years = list(range(1950, 1958))
    first_entry = years[0]
    print(len(years))
    i = 79
    for loop_round in range(2):
        amount = 1503.34
        print(amount)


main()
